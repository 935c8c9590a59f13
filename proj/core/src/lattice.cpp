#include "hkfl/lattice.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "hkfl/error.hpp"

namespace hkfl {

namespace {

Matrix<Integer> to_exact(const IntMatrix& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

Lattice block_sum(std::initializer_list<Lattice> parts, std::string label) {
  std::size_t rank = 0;
  for (const auto& p : parts) rank += p.rank();
  IntMatrix gram(rank, rank, 0);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j)
        gram(offset + i, offset + j) = p.gram()(i, j);
    offset += p.rank();
  }
  return Lattice::from_gram(std::move(gram), std::move(label));
}

std::int64_t parse_int(std::string_view text, std::string_view context) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorCode::BadParameter,
                "cannot parse integer '" + std::string(text) + "' in " +
                    std::string(context));
  }
  return value;
}

// "Name(arg)" or "Name:arg" -> arg; nullopt when the name does not match.
std::optional<std::string_view> argument_of(std::string_view name,
                                            std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix)
    return std::nullopt;
  std::string_view rest = name.substr(prefix.size());
  if (rest.front() == ':') return rest.substr(1);
  if (rest.front() == '(' && rest.back() == ')')
    return rest.substr(1, rest.size() - 2);
  return std::nullopt;
}

}  // namespace

Lattice Lattice::from_gram(IntMatrix gram, std::string label) {
  if (!gram.is_square()) {
    throw Error(ErrorCode::NotSquare, "gram matrix must be square");
  }
  const std::size_t n = gram.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) {
        throw Error(ErrorCode::NotSymmetric,
                    "gram(" + std::to_string(i) + "," + std::to_string(j) +
                        ") != gram(" + std::to_string(j) + "," +
                        std::to_string(i) + ")");
      }
    }
    if (gram(i, i) % 2 != 0) {
      throw Error(ErrorCode::NotEven, "diagonal entry " + std::to_string(i) +
                                          " is odd (lattice must be even)");
    }
  }
  if (hkfl::determinant(to_exact(gram)) == 0) {
    throw Error(ErrorCode::Degenerate, "gram matrix has determinant 0");
  }
  return Lattice(std::move(gram), std::move(label));
}

Integer Lattice::determinant() const { return hkfl::determinant(to_exact(gram_)); }

Integer Lattice::pairing(std::span<const std::int64_t> x,
                         std::span<const std::int64_t> y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw Error(ErrorCode::BadParameter, "vector length does not match rank");
  }
  Integer out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += Integer(gram_(i, j)) * y[j];
    out += row * x[i];
  }
  return out;
}

Lattice make_lattice(const IntMatrix& gram) { return Lattice::from_gram(gram); }

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
  return block_sum({a, b}, std::move(label));
}

Lattice rescale(const Lattice& a, std::int64_t k) {
  if (k == 0) throw Error(ErrorCode::BadParameter, "rescale factor must be non-zero");
  IntMatrix gram(a.rank(), a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      gram(i, j) = checked_mul(a.gram()(i, j), k);
  std::string label;
  if (!a.label().empty()) label = a.label() + "(" + std::to_string(k) + ")";
  return Lattice::from_gram(std::move(gram), std::move(label));
}

Lattice lattice_u() { return Lattice::from_gram({{0, 1}, {1, 0}}, "U"); }

Lattice lattice_e8() {
  IntMatrix gram(8, 8, 0);
  for (std::size_t i = 0; i < 8; ++i) gram(i, i) = 2;
  // Bourbaki nodes 1..8 stored at indices 0..7.
  constexpr std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6},
                                           {6, 7}, {7, 8}, {2, 4}};
  for (auto [a, b] : edges) {
    gram(a - 1, b - 1) = -1;
    gram(b - 1, a - 1) = -1;
  }
  return Lattice::from_gram(std::move(gram), "E8");
}

Lattice lattice_e8(std::int64_t scale) { return rescale(lattice_e8(), scale); }

Lattice lattice_a1(std::int64_t k) {
  if (k == 0) throw Error(ErrorCode::BadParameter, "A1(k) needs k != 0");
  return Lattice::from_gram({{checked_mul(2, k)}}, "A1(" + std::to_string(k) + ")");
}

Lattice lattice_ln(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "Ln(n) needs n >= 2");
  const Lattice u = lattice_u();
  const Lattice e8m1 = lattice_e8(-1);
  const Lattice tail =
      Lattice::from_gram({{checked_add(checked_mul(-2, n), 2)}});
  return block_sum({u, u, u, e8m1, e8m1, tail}, "Ln(" + std::to_string(n) + ")");
}

Lattice lattice_mukai() {
  const Lattice u = lattice_u();
  const Lattice e8m1 = lattice_e8(-1);
  return block_sum({u, u, u, u, e8m1, e8m1}, "Mukai");
}

Lattice lattice_mukai_kummer() {
  const Lattice u = lattice_u();
  return block_sum({u, u, u, u}, "MukaiKummer");
}

Lattice lattice_kummer_h2(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "Kummer(n) needs n >= 2");
  const Lattice u = lattice_u();
  const Lattice tail =
      Lattice::from_gram({{checked_add(checked_mul(-2, n), -2)}});
  return block_sum({u, u, u, tail}, "Kummer(" + std::to_string(n) + ")");
}

Lattice named_lattice(std::string_view name) {
  if (name == "U") return lattice_u();
  if (name == "E8") return lattice_e8();
  if (name == "E8m2") return lattice_e8(-2);
  if (name == "Mukai" || name == "mukai") return lattice_mukai();
  if (name == "MukaiKummer" || name == "mukai-kummer") return lattice_mukai_kummer();
  if (auto arg = argument_of(name, "E8")) return lattice_e8(parse_int(*arg, name));
  if (auto arg = argument_of(name, "A1")) return lattice_a1(parse_int(*arg, name));
  if (auto arg = argument_of(name, "Ln")) return lattice_ln(parse_int(*arg, name));
  if (auto arg = argument_of(name, "Kummer")) return lattice_kummer_h2(parse_int(*arg, name));
  throw Error(ErrorCode::BadParameter, "unknown lattice name '" + std::string(name) + "'");
}

Integer determinant(const Matrix<Integer>& input) {
  if (!input.is_square()) throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  Matrix<Integer> a = input;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Signature signature(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = gram(i, j);

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, i) != 0) { pivot = i; break; }
    }
    if (pivot == n) {
      // Zero diagonal: fold an off-diagonal partner into row/col k.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) { pi = i; pj = j; break; }
      if (pi == n) {
        sig.zero += n - k;
        break;
      }
      a.add_row(pi, pj, Rational(1));
      a.add_col(pi, pj, Rational(1));
      pivot = pi;
    }
    a.swap_rows(k, pivot);
    a.swap_cols(k, pivot);
    const Rational d = a(k, k);
    (d > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / d;
      a.add_row(i, k, -f);
      a.add_col(i, k, -f);
    }
  }
  return sig;
}

Integer divisibility(const Lattice& l, std::span<const std::int64_t> v) {
  if (v.size() != l.rank()) {
    throw Error(ErrorCode::BadParameter, "vector length does not match rank");
  }
  bool zero = true;
  for (auto x : v) zero = zero && x == 0;
  if (zero) throw Error(ErrorCode::ZeroVector, "divisibility of the zero vector");
  Integer g = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < l.rank(); ++j) row += Integer(l.gram()(i, j)) * v[j];
    g = boost::multiprecision::gcd(g, row);
  }
  return abs(g);
}

}  // namespace hkfl
