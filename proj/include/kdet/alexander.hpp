#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "kdet/diagram.hpp"
#include "kdet/exact.hpp"
#include "kdet/states.hpp"
#include "kdet/tait.hpp"

namespace kdet {

// Polynomial in t with exact integer coefficients; zero coefficients are
// never stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  static IntPolynomial monomial(const BigInt& coefficient, unsigned power);

  const std::map<unsigned, BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(unsigned power) const;
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  BigInt evaluate(const BigInt& t) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Same polynomial up to a factor ±t^k.
  bool equal_up_to_unit(const IntPolynomial& o) const;

  std::string to_string() const;

 private:
  std::map<unsigned, BigInt> coeffs_;
};

// Quadrant names at a crossing: B lies between the two incoming strands, W
// between the two outgoing ones, and U, D are the mixed angles, so that the
// counterclockwise order is B, D, W, U.
enum class Quadrant { U, B, W, D };

char to_char(Quadrant q);

// ±t^power with power 0 or 1.
struct CornerLabel {
  int sign = 1;
  unsigned power = 0;

  friend bool operator==(const CornerLabel&, const CornerLabel&) = default;
};

struct CrossingLabelling {
  CrossingSign sign = CrossingSign::positive;
  std::array<Quadrant, 4> quadrant{};   // by corner index
  std::array<CornerLabel, 4> label{};   // by corner index
};

struct CrossingLabels {
  std::vector<CrossingLabelling> crossings;
};

// Corner holding the black hole quadrant B at crossing x.
std::size_t black_hole_corner(const LinkDiagram& d, CrossingId x);
std::size_t black_hole_count(const LinkDiagram& d, const KauffmanState& st);

// Alexander labels for a knot diagram. Throws Error(MultiComponent) on links.
CrossingLabels label_universe(const LinkDiagram& d);

struct StateProduct {
  int sign = 1;  // (-1)^b(S)
  std::size_t black_holes = 0;
  int label_sign = 1;
  unsigned t_power = 0;

  IntPolynomial term() const { return IntPolynomial::monomial(sign * label_sign, t_power); }
  int at_minus_one() const { return sign * label_sign * (t_power % 2 == 0 ? 1 : -1); }
};

StateProduct inner_product(const KauffmanState& st, const CrossingLabels& labels);

IntPolynomial state_sum(const Universe& u, const StarPlacement& s, const CrossingLabels& labels);

// |state set| for an alternating diagram; for knots it first checks that
// every state contributes the same sign at t = -1.
// Throws Error(NotAlternating) or Error(SignMixture).
BigInt determinant_via_states(const LinkDiagram& d);

// Reduced Goeritz matrix over the white regions (the lowest white region
// removed). A crossing contributes +1 when the over-strand, turned
// counterclockwise, sweeps its white angles, and -1 otherwise.
Matrix<BigInt> goeritz_matrix(const LinkDiagram& d, const Universe& u, const FaceColoring& c);
std::vector<int> goeritz_types(const LinkDiagram& d, const Universe& u, const FaceColoring& c);
BigInt goeritz_determinant(const LinkDiagram& d, const Universe& u, const FaceColoring& c);

}  // namespace kdet
