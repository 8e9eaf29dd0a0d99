#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace linfty {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_of(int k) { return (k & 1) ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) { return parity_of(bit(a) + bit(b)); }
inline Parity flip(Parity p) { return p + Parity::Odd; }
// Koszul exponent of swapping objects of parities a and b.
inline int koszul(Parity a, Parity b) { return bit(a) & bit(b); }

struct Generator {
  std::string name;
  Parity parity = Parity::Even;
  friend bool operator==(const Generator&, const Generator&) = default;
};

// Finite-dimensional Z/2-graded vector space given by a named homogeneous basis.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<Generator> basis);

  std::size_t dim() const { return basis_.size(); }
  std::size_t even_dim() const;
  std::size_t odd_dim() const { return dim() - even_dim(); }
  Parity parity(std::size_t i) const { return basis_[i].parity; }
  const std::string& name(std::size_t i) const { return basis_[i].name; }
  const std::vector<Generator>& basis() const { return basis_; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws E_SHAPE

  // "e|o" dimension label
  std::string dim_label() const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::vector<Generator> basis_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

inline SpacePtr make_space(std::vector<Generator> basis) {
  return std::make_shared<const GradedSpace>(std::move(basis));
}

// Same basis with every parity flipped; names get a "Π" prefix.
GradedSpace parity_reverse(const GradedSpace& v);
// Dual basis; names get a "*" suffix, parities unchanged.
GradedSpace dual_space(const GradedSpace& v);
GradedSpace direct_sum(const GradedSpace& a, const GradedSpace& b);

}  // namespace linfty
