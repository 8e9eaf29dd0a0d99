#include "linfty/graded_space.hpp"

#include <set>

#include "linfty/errors.hpp"

namespace linfty {

GradedSpace::GradedSpace(std::vector<Generator> basis) : basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& g : basis_) {
    require(!g.name.empty(), ErrorCode::Shape, "empty generator name");
    require(seen.insert(g.name).second, ErrorCode::Shape, "duplicate generator name '" + g.name + "'");
  }
}

std::size_t GradedSpace::even_dim() const {
  std::size_t n = 0;
  for (const auto& g : basis_) n += g.parity == Parity::Even;
  return n;
}

std::optional<std::size_t> GradedSpace::find(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

std::size_t GradedSpace::index_of(const std::string& name) const {
  auto i = find(name);
  require(i.has_value(), ErrorCode::Shape, "unknown generator '" + name + "'");
  return *i;
}

std::string GradedSpace::dim_label() const {
  return std::to_string(even_dim()) + "|" + std::to_string(odd_dim());
}

GradedSpace parity_reverse(const GradedSpace& v) {
  std::vector<Generator> out;
  for (const auto& g : v.basis()) out.push_back({"Π" + g.name, flip(g.parity)});
  return GradedSpace(std::move(out));
}

GradedSpace dual_space(const GradedSpace& v) {
  std::vector<Generator> out;
  for (const auto& g : v.basis()) out.push_back({g.name + "*", g.parity});
  return GradedSpace(std::move(out));
}

GradedSpace direct_sum(const GradedSpace& a, const GradedSpace& b) {
  std::vector<Generator> out = a.basis();
  out.insert(out.end(), b.basis().begin(), b.basis().end());
  return GradedSpace(std::move(out));
}

}  // namespace linfty
