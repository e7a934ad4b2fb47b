#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "instanton/matrix.hpp"
#include "instanton/poly.hpp"
#include "instanton/rational.hpp"

namespace instanton {

// Partition written largest part first; parts are positive.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  // Comma-separated parts, largest first, e.g. "3,2,1".
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string item = text.substr(pos, comma - pos);
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("invalid partition literal: '" + text + "'");
      parts.push_back(std::stoi(item));
      pos = comma + 1;
      if (comma == text.size()) break;
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int weight() const {
    int c = 0;
    for (int p : parts_) c += p;
    return c;
  }
  bool empty() const { return parts_.empty(); }
  // Single row or single column.
  bool is_primitive() const {
    return parts_.size() == 1 || (!parts_.empty() && parts_.front() == 1);
  }

  Partition transpose() const {
    std::vector<int> t;
    for (int j = 1; parts_.empty() ? false : j <= parts_.front(); ++j) {
      int count = 0;
      for (int p : parts_)
        if (p >= j) ++count;
      t.push_back(count);
    }
    return Partition(std::move(t));
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

// All partitions of c, lexicographically descending: (c) first, (1^c) last.
inline std::vector<Partition> partitions_of(int c) {
  if (c < 0) throw std::invalid_argument("negative partition weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, c, c);
  return out;
}

// Diagram cell: a = exponent along z2, b = exponent along z3.
struct Box {
  int a = 0, b = 0;
  int weight() const { return a + b; }
  bool operator==(const Box&) const = default;
  bool operator<(const Box& o) const { return std::pair(a, b) < std::pair(o.a, o.b); }
};

// Cells of the diagram: column b holds parts[b] cells.
inline std::vector<Box> boxes(const Partition& nu) {
  std::vector<Box> out;
  const auto& parts = nu.parts();
  for (int b = 0; b < static_cast<int>(parts.size()); ++b)
    for (int a = 0; a < parts[static_cast<std::size_t>(b)]; ++a) out.push_back({a, b});
  return out;
}

// Monomial ideal in z2, z3 whose quotient is spanned by the diagram cells.
struct MonomialIdeal {
  std::vector<Box> generators;  // staircase corners, z2-exponent descending

  std::string str() const {
    auto mono = [](const Box& g) {
      std::string s;
      if (g.a > 0) {
        s += "z2";
        if (g.a > 1) s += "^" + std::to_string(g.a);
      }
      if (g.b > 0) {
        if (!s.empty()) s += "*";
        s += "z3";
        if (g.b > 1) s += "^" + std::to_string(g.b);
      }
      return s.empty() ? std::string("1") : s;
    };
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i) out += ", ";
      out += mono(generators[i]);
    }
    return out + ">";
  }

  bool operator==(const MonomialIdeal&) const = default;
};

// Minimal generators of the ideal of monomials outside the diagram.
inline MonomialIdeal partition_to_ideal(const Partition& nu) {
  if (nu.empty()) throw std::invalid_argument("empty partition has no ideal");
  const auto& parts = nu.parts();
  const int k = nu.rows();
  MonomialIdeal ideal;
  ideal.generators.push_back({parts[0], 0});
  for (int b = 1; b < k; ++b)
    if (parts[static_cast<std::size_t>(b)] < parts[static_cast<std::size_t>(b - 1)])
      ideal.generators.push_back({parts[static_cast<std::size_t>(b)], b});
  ideal.generators.push_back({0, k});
  return ideal;
}

// Inverse of partition_to_ideal; rejects generator sets that are not the
// staircase corners of a finite diagram supported on the z2 = z3 = 0 line.
inline Partition ideal_to_partition(const MonomialIdeal& ideal) {
  auto gens = ideal.generators;
  std::sort(gens.begin(), gens.end(), [](const Box& x, const Box& y) { return x.a > y.a; });
  const auto reject = []() -> Partition {
    throw std::invalid_argument("not a multiple-line ideal");
  };
  if (gens.size() < 2) return reject();
  if (gens.front().b != 0 || gens.back().a != 0) return reject();
  for (std::size_t i = 0; i + 1 < gens.size(); ++i)
    if (gens[i].a <= gens[i + 1].a || gens[i].b >= gens[i + 1].b) return reject();

  std::vector<int> parts;
  const int rows = gens.back().b;
  std::size_t active = 0;
  for (int b = 0; b < rows; ++b) {
    while (active + 1 < gens.size() && gens[active + 1].b <= b) ++active;
    if (gens[active].a <= 0) return reject();
    parts.push_back(gens[active].a);
  }
  Partition nu(std::move(parts));
  if (partition_to_ideal(nu).generators != gens) return reject();
  return nu;
}

// Weights of the ideal's minimal generators (inner) and of the corner
// positions encoding the first syzygies (outer).  Sorted ascending.
inline std::pair<std::vector<int>, std::vector<int>> inner_outer_boxes(const Partition& nu) {
  const auto gens = partition_to_ideal(nu).generators;
  std::vector<int> inner, outer;
  for (const auto& g : gens) inner.push_back(g.weight());
  for (std::size_t i = 0; i + 1 < gens.size(); ++i)
    outer.push_back(gens[i].a + gens[i + 1].b);
  std::sort(inner.begin(), inner.end());
  std::sort(outer.begin(), outer.end());
  return {std::move(inner), std::move(outer)};
}

// Two-term free resolution of the ideal sheaf, recorded by its twists.
struct FreeResolution {
  std::vector<int> inner_weights;  // middle term O(-n) summands
  std::vector<int> outer_weights;  // left term O(-n) summands
  bool operator==(const FreeResolution&) const = default;
};

inline FreeResolution resolution(const Partition& nu) {
  auto [inner, outer] = inner_outer_boxes(nu);
  return {std::move(inner), std::move(outer)};
}

// chi(O(m)) - sum_i chi(O(m - n1_i)) + sum_j chi(O(m - n2_j)): the Euler
// characteristic of the structure sheaf via the resolution.
inline UniPoly resolution_structure_chi(const FreeResolution& res) {
  UniPoly acc = twisted_euler_cubic(0);
  for (int n : res.inner_weights) acc = acc - twisted_euler_cubic(-n);
  for (int n : res.outer_weights) acc = acc + twisted_euler_cubic(-n);
  return acc;
}

// chi(O_C(m)) = c m + 3c - sum_i nu_i (nu_i + 2i + 1) / 2, i one-based.
inline UniPoly hilbert_poly_closed(const Partition& nu) {
  const int c = nu.weight();
  Rational constant = Rational(3 * c);
  const auto& parts = nu.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    constant -= Rational(parts[i]) * Rational(parts[i] + 2 * (static_cast<long long>(i) + 1) + 1) / 2;
  return UniPoly({constant, Rational(c)});
}

// Brute-force count of degree-m monomials z0^p z1^q z2^a z3^b with (a,b) a
// diagram cell.
inline long long hilbert_fn_oracle(const Partition& nu, int m) {
  if (m < 0) throw std::invalid_argument("negative degree");
  long long count = 0;
  for (const auto& box : boxes(nu)) {
    const int free_deg = m - box.weight();
    if (free_deg >= 0) count += free_deg + 1;  // choices of (p, q) with p + q = free_deg
  }
  return count;
}

namespace detail {
inline Int binomial3(int delta) {  // C(delta + 3, 3)
  return Int(delta + 3) * (delta + 2) * (delta + 1) / 6;
}
}  // namespace detail

// Dimension of the deformation space of the ideal: the four-sum binomial
// formula over inner/outer weight pairs, plus one.
inline Int hilbert_scheme_dim(const Partition& nu) {
  const auto [inner, outer] = inner_outer_boxes(nu);
  Int d = 1;
  for (int n1 : inner)
    for (int n2 : outer) {
      if (n2 >= n1) d += detail::binomial3(n2 - n1);
      if (n1 >= n2) d += detail::binomial3(n1 - n2);
    }
  for (int x : outer)
    for (int y : outer)
      if (y >= x) d -= detail::binomial3(y - x);
  for (int x : inner)
    for (int y : inner)
      if (y >= x) d -= detail::binomial3(y - x);
  return d;
}

// Length of the zero-dimensional part: 1/2 sum nu_i^2 + sum i nu_i - c/2.
inline Rational quotient_length_formula(const Partition& nu) {
  const auto& parts = nu.parts();
  Rational acc = -Rational(nu.weight()) / 2;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    acc += Rational(parts[i]) * Rational(parts[i]) / 2;
    acc += Rational(static_cast<long long>(i) + 1) * Rational(parts[i]);
  }
  return acc;
}

inline Int quotient_length(const Partition& nu) {
  const Rational v = quotient_length_formula(nu);
  if (!is_integer(v) || v < 0) throw std::logic_error("quotient length must be a nonnegative integer");
  return rat_num(v);
}

// Chain of sub-diagrams cut out by the weight staircases w <= 0, w <= 1, ...;
// strictly increases and ends at the full diagram.
inline std::vector<Partition> infinitesimal_filtration(const Partition& nu) {
  if (nu.empty()) throw std::invalid_argument("empty partition has no filtration");
  std::vector<Partition> chain;
  const auto& parts = nu.parts();
  for (int w = 0;; ++w) {
    std::vector<int> sub;
    for (int b = 0; b < nu.rows(); ++b) {
      const int cells = std::min(parts[static_cast<std::size_t>(b)], std::max(0, w - b + 1));
      if (cells == 0) break;
      sub.push_back(cells);
    }
    Partition p(std::move(sub));
    if (chain.empty() || !(chain.back() == p)) chain.push_back(p);
    if (chain.back() == nu) return chain;
  }
}

// Degree-zero graded piece of Hom(I, S/I) by direct monomial linear algebra:
// one unknown per monomial image of each ideal generator, one constraint row
// per monomial of each syzygy degree.
inline Int hom_degree0_dim(const Partition& nu) {
  const auto gens = partition_to_ideal(nu).generators;
  const auto cells = boxes(nu);
  const auto in_diagram = [&cells](int a, int b) {
    return std::find(cells.begin(), cells.end(), Box{a, b}) != cells.end();
  };

  // Monomial basis of (S/I)_d: (p, q, a, b) with p+q+a+b = d, (a,b) a cell.
  struct Mono {
    int p, q, a, b;
    bool operator==(const Mono&) const = default;
    bool operator<(const Mono& o) const {
      return std::tie(p, q, a, b) < std::tie(o.p, o.q, o.a, o.b);
    }
  };
  auto basis_of_degree = [&](int d) {
    std::vector<Mono> out;
    for (const auto& cell : cells) {
      const int rest = d - cell.weight();
      for (int p = 0; p <= rest; ++p) out.push_back({p, rest - p, cell.a, cell.b});
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  // Unknown layout: images of generator g_i range over basis_of_degree(w_i).
  std::vector<std::vector<Mono>> image_basis;
  std::vector<int> offset{0};
  for (const auto& g : gens) {
    image_basis.push_back(basis_of_degree(g.weight()));
    offset.push_back(offset.back() + static_cast<int>(image_basis.back().size()));
  }
  const int unknowns = offset.back();

  // Constraints: for consecutive generators g_i, g_{i+1}, the syzygy
  //   z3^(b_{i+1} - b_i) g_i = z2^(a_i - a_{i+1}) g_{i+1}
  // must be respected by the images modulo I.
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    const int alpha = gens[i].a - gens[i + 1].a;
    const int beta = gens[i + 1].b - gens[i].b;
    const int degree = gens[i].weight() + beta;  // = corner weight
    const auto target = basis_of_degree(degree);
    const auto target_index = [&target](const Mono& m) {
      const auto it = std::lower_bound(target.begin(), target.end(), m);
      return (it != target.end() && *it == m) ? static_cast<int>(it - target.begin()) : -1;
    };
    std::vector<std::vector<Rational>> block(
        target.size(), std::vector<Rational>(static_cast<std::size_t>(unknowns), Rational(0)));
    for (std::size_t k = 0; k < image_basis[i].size(); ++k) {
      const Mono& m = image_basis[i][k];
      if (!in_diagram(m.a, m.b + beta)) continue;  // lands in I
      const int t = target_index({m.p, m.q, m.a, m.b + beta});
      block[static_cast<std::size_t>(t)][static_cast<std::size_t>(offset[i] + static_cast<int>(k))] += 1;
    }
    for (std::size_t k = 0; k < image_basis[i + 1].size(); ++k) {
      const Mono& m = image_basis[i + 1][k];
      if (!in_diagram(m.a + alpha, m.b)) continue;
      const int t = target_index({m.p, m.q, m.a + alpha, m.b});
      block[static_cast<std::size_t>(t)][static_cast<std::size_t>(offset[i + 1] + static_cast<int>(k))] -= 1;
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }

  if (rows.empty()) return Int(unknowns);
  RatMatrix m(static_cast<int>(rows.size()), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < unknowns; ++j) m(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
  return Int(unknowns - m.rank());
}

}  // namespace instanton
