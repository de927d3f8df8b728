#pragma once

// Normalized rational functions over Q and the variable naming used when
// printing them.

#include <string>
#include <vector>

#include "septel/mpoly.hpp"

namespace septel {

/// The two kinds of operators in t: derivation D and shift S.
enum class OpKind { Derivation, Shift };

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}        // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Reduces to lowest terms; throws std::domain_error for a zero denominator.
  RatFunc(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const { return num_.constant_value(); }
  VarSet support() const { return num_.support() | den_.support(); }
  bool free_of(VarSet vars) const { return (support() & vars) == 0; }
  bool depends_on(VarId v) const { return contains(support(), v); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  RatFunc derivative(VarId v) const;
  RatFunc shift(VarId v, const Rat& amount) const;
  /// Throws std::domain_error when the denominator vanishes at the point.
  RatFunc evaluate(VarId v, const Rat& value) const;
  RatFunc substitute(VarId v, const RatFunc& value) const;
  RatFunc rename(const std::vector<VarId>& map) const;

 private:
  MPoly num_;
  MPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

/// Names for variable ids. Unnamed ids print as v<id>.
class VarNames {
 public:
  VarNames();
  explicit VarNames(std::vector<std::string> names) : names_(std::move(names)) {}

  const std::string& operator[](VarId v) const;
  void set(VarId v, std::string name);
  /// Id of a name, or -1.
  VarId find(const std::string& name) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  mutable std::vector<std::string> fallback_;
};

/// Single-parameter universe: t = 0, x = 1.
inline constexpr VarId kX = 1;

std::string to_string(const Rat& r);
std::string to_string(const MPoly& p, const VarNames& names = VarNames());
std::string to_string(const RatFunc& f, const VarNames& names = VarNames());

}  // namespace septel
