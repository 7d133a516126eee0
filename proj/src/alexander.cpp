#include "kdet/alexander.hpp"

#include <algorithm>
#include <sstream>

#include "kdet/error.hpp"

namespace kdet {

IntPolynomial IntPolynomial::monomial(const BigInt& coefficient, unsigned power) {
  IntPolynomial p;
  if (coefficient != 0) p.coeffs_.emplace(power, coefficient);
  return p;
}

BigInt IntPolynomial::coefficient(unsigned power) const {
  const auto it = coeffs_.find(power);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

int IntPolynomial::degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first); }

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  // Horner over the dense range of exponents.
  BigInt acc = 0;
  for (int k = degree(); k >= 0; --k) acc = acc * t + coefficient(static_cast<unsigned>(k));
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [k, c] : o.coeffs_) {
    auto& slot = coeffs_[k];
    slot += c;
    if (slot == 0) coeffs_.erase(k);
  }
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  for (const auto& [i, x] : a.coeffs_) {
    for (const auto& [j, y] : b.coeffs_) out += IntPolynomial::monomial(x * y, i + j);
  }
  return out;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [k, c] : out.coeffs_) c = -c;
  return out;
}

bool IntPolynomial::equal_up_to_unit(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (coeffs_.size() != o.coeffs_.size()) return false;
  const unsigned shift_a = coeffs_.begin()->first, shift_b = o.coeffs_.begin()->first;
  const int sign = coeffs_.begin()->second == o.coeffs_.begin()->second ? 1 : -1;
  auto it = o.coeffs_.begin();
  for (const auto& [k, c] : coeffs_) {
    if (k - shift_a != it->first - shift_b || c != sign * it->second) return false;
    ++it;
  }
  return true;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [k, c] = *it;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << 't';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

char to_char(Quadrant q) {
  switch (q) {
    case Quadrant::U: return 'U';
    case Quadrant::B: return 'B';
    case Quadrant::W: return 'W';
    case Quadrant::D: return 'D';
  }
  return '?';
}

std::size_t black_hole_corner(const LinkDiagram& d, CrossingId x) {
  // Incoming ends sit at position 0 and at the over-strand's entry.
  return d.over_entry(x) == 3 ? 3 : 0;
}

std::size_t black_hole_count(const LinkDiagram& d, const KauffmanState& st) {
  std::size_t b = 0;
  for (CrossingId x = 0; x < st.corner.size(); ++x) {
    if (st.corner[x] == black_hole_corner(d, x)) ++b;
  }
  return b;
}

CrossingLabels label_universe(const LinkDiagram& d) {
  if (d.component_count() != 1) {
    throw Error(ErrorCode::MultiComponent, "Alexander labels are defined here for knots only; the diagram has " +
                                               std::to_string(d.component_count()) + " components");
  }
  // In the counterclockwise corner frame starting at the incoming
  // under-strand the labels read t, -t, 1, -1 for both crossing types. For a
  // positive crossing that is U = 1, B = -1, W = -t, D = t; for a negative one
  // U = -1, B = t, W = 1, D = -t.
  static constexpr std::array<CornerLabel, 4> frame{{{1, 1}, {-1, 1}, {1, 0}, {-1, 0}}};
  static constexpr std::array<Quadrant, 4> from_black_hole{Quadrant::B, Quadrant::D, Quadrant::W, Quadrant::U};
  CrossingLabels labels;
  labels.crossings.resize(d.n());
  for (CrossingId x = 0; x < d.n(); ++x) {
    auto& c = labels.crossings[x];
    c.sign = d.sign(x);
    c.label = frame;
    const std::size_t b = black_hole_corner(d, x);
    for (std::size_t k = 0; k < 4; ++k) c.quadrant[(b + k) % 4] = from_black_hole[k];
  }
  return labels;
}

StateProduct inner_product(const KauffmanState& st, const CrossingLabels& labels) {
  StateProduct sp;
  for (CrossingId x = 0; x < st.corner.size(); ++x) {
    const auto& c = labels.crossings[x];
    const std::size_t i = st.corner[x];
    if (c.quadrant[i] == Quadrant::B) ++sp.black_holes;
    sp.label_sign *= c.label[i].sign;
    sp.t_power += c.label[i].power;
  }
  sp.sign = sp.black_holes % 2 == 0 ? 1 : -1;
  return sp;
}

IntPolynomial state_sum(const Universe& u, const StarPlacement& s, const CrossingLabels& labels) {
  IntPolynomial sum;
  for (const auto& st : enumerate_states(u, s)) sum += inner_product(st, labels).term();
  return sum;
}

BigInt determinant_via_states(const LinkDiagram& d) {
  if (!check_alternating(d)) throw Error(ErrorCode::NotAlternating, "the diagram is not alternating");
  const Universe u = build_universe(d);
  const auto states = enumerate_states(u, default_stars(u));
  if (d.component_count() == 1) {
    const auto labels = label_universe(d);
    bool seen_plus = false, seen_minus = false;
    for (const auto& st : states) {
      (inner_product(st, labels).at_minus_one() > 0 ? seen_plus : seen_minus) = true;
    }
    if (seen_plus && seen_minus) {
      throw Error(ErrorCode::SignMixture, "states of an alternating knot disagree in sign at t = -1");
    }
  }
  return BigInt(states.size());
}

std::vector<int> goeritz_types(const LinkDiagram& d, const Universe& u, const FaceColoring& c) {
  std::vector<int> eta(d.n());
  for (CrossingId x = 0; x < d.n(); ++x) {
    // Turning counterclockwise, the over-strand ends at positions 1 and 3
    // sweep corners 1 and 3.
    eta[x] = c.of(u.region_of(corner(x, 1))) == Color::white ? 1 : -1;
  }
  return eta;
}

Matrix<BigInt> goeritz_matrix(const LinkDiagram& d, const Universe& u, const FaceColoring& c) {
  std::vector<RegionId> whites;
  for (const auto& r : u.regions()) {
    if (c.of(r.id) == Color::white) whites.push_back(r.id);
  }
  const auto index = [&](RegionId r) {
    return static_cast<std::size_t>(std::lower_bound(whites.begin(), whites.end(), r) - whites.begin());
  };
  Matrix<BigInt> g(whites.size(), std::vector<BigInt>(whites.size(), 0));
  const auto eta = goeritz_types(d, u, c);
  for (CrossingId x = 0; x < d.n(); ++x) {
    const std::size_t k = eta[x] > 0 ? 1 : 0;
    const RegionId a = u.region_of(corner(x, k)), b = u.region_of(corner(x, k + 2));
    if (a == b) continue;
    const auto i = index(a), j = index(b);
    g[i][j] -= eta[x];
    g[j][i] -= eta[x];
    g[i][i] += eta[x];
    g[j][j] += eta[x];
  }
  Matrix<BigInt> reduced;
  for (std::size_t i = 1; i < g.size(); ++i) reduced.emplace_back(g[i].begin() + 1, g[i].end());
  return reduced;
}

BigInt goeritz_determinant(const LinkDiagram& d, const Universe& u, const FaceColoring& c) {
  BigInt det = bareiss_determinant(goeritz_matrix(d, u, c));
  return det < 0 ? BigInt(-det) : det;
}

}  // namespace kdet
