#pragma once

// Exact linear algebra over permutation-identity systems M z = a.
//
// Arguments are opaque symbols; a merged part k_i + k_j is a formal sum of
// symbols, so two columns coincide only when their symbol multisets agree.

#include "mzv/combination.hpp"
#include "mzv/identities.hpp"
#include "mzv/stuffle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

/// Formal sum of argument symbols, kept as a sorted multiset.
struct SymbolSum {
  std::vector<int> symbols;

  SymbolSum() = default;
  explicit SymbolSum(int s) : symbols{s} {}
  explicit SymbolSum(std::vector<int> s) : symbols(std::move(s)) { std::sort(symbols.begin(), symbols.end()); }

  friend auto operator<=>(const SymbolSum&, const SymbolSum&) = default;
  friend bool operator==(const SymbolSum&, const SymbolSum&) = default;
};

inline int part_weight(const SymbolSum& s) { return static_cast<int>(s.symbols.size()); }
inline bool divergent_head(const SymbolSum&) { return false; }

inline SymbolSum merge_parts(const SymbolSum& a, const SymbolSum& b) {
  std::vector<int> s = a.symbols;
  s.insert(s.end(), b.symbols.begin(), b.symbols.end());
  return SymbolSum(std::move(s));
}

using SymbolParts = std::vector<SymbolSum>;
using SymbolCombination = BasicCombination<SymbolSum>;

inline std::string symbol_name(int s) {
  if (s < 26) return std::string(1, static_cast<char>('a' + s));
  return "s" + std::to_string(s);
}

inline std::string format_symbol_sum(const SymbolSum& s) {
  std::string out;
  for (std::size_t i = 0; i < s.symbols.size(); ++i) out += (i ? "+" : "") + symbol_name(s.symbols[i]);
  return out;
}

inline std::string format_symbol_parts(const SymbolParts& p) {
  std::string out = "ζ(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + format_symbol_sum(p[i]);
  return out + ")";
}

inline std::string format_combination(const SymbolCombination& c) {
  return format_combination(c, [](const SymbolSum& s) { return format_symbol_sum(s); });
}

/// Substitutes concrete integers for the symbols.
inline ZetaCombination instantiate(const SymbolCombination& c, const std::vector<int>& values) {
  ZetaCombination out;
  for (const auto& [factors, coeff] : c.map()) {
    std::vector<Parts> fs;
    for (const auto& f : factors) {
      Parts p;
      for (const auto& s : f) {
        int v = 0;
        for (int sym : s.symbols) v += values.at(static_cast<std::size_t>(sym));
        p.push_back(v);
      }
      fs.push_back(std::move(p));
    }
    out.add(std::move(fs), coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    for (std::size_t j = 0; j < cols; ++j) labels_.push_back("c" + std::to_string(j));
  }
  ExactMatrix(std::size_t rows, std::vector<std::string> labels)
      : rows_(rows), cols_(labels.size()), data_(rows * labels.size()), labels_(std::move(labels)) {
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("column labels must be unique");
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

  void append_row(const std::vector<Rational>& row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  ExactMatrix select_columns(const std::vector<std::size_t>& cols) const {
    std::vector<std::string> lab;
    for (auto c : cols) lab.push_back(labels_.at(c));
    ExactMatrix out(rows_, lab);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
    return out;
  }

  /// Plain-text export: a label line, then one row of "p/q" entries per line.
  std::string to_text() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "\t" : "") << labels_[j];
    os << "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "\t" : "") << to_fraction_string((*this)(i, j));
      os << "\n";
    }
    return os.str();
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
  std::vector<std::string> labels_;
};

namespace detail {

/// Fraction-free (Bareiss) elimination on integer-scaled rows, pivoting on
/// the entry of smallest magnitude; returns the original indices of the
/// pivot rows, which are linearly independent.
inline std::vector<std::size_t> bareiss_pivot_rows(const ExactMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  std::vector<std::size_t> origin(R);
  for (std::size_t i = 0; i < R; ++i) {
    origin[i] = i;
    Integer l = 1;
    for (std::size_t j = 0; j < C; ++j) l = boost::multiprecision::lcm(l, denominator_of(m(i, j)));
    for (std::size_t j = 0; j < C; ++j) a[i][j] = numerator_of(m(i, j)) * (l / denominator_of(m(i, j)));
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (a[i][c] != 0 && (piv == R || abs(a[i][c]) < abs(a[piv][c]))) piv = i;
    if (piv == R) continue;
    std::swap(a[r], a[piv]);
    std::swap(origin[r], origin[piv]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(origin[r]);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Exact rank over the rationals.
inline std::size_t rank(const ExactMatrix& m) { return detail::bareiss_pivot_rows(m).size(); }

/// Reduced row echelon form over the rationals; returns pivot columns.
inline std::vector<std::size_t> rref(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// ---------------------------------------------------------------------------
// Permutation systems

struct PermutationSystem {
  int length = 0;
  std::vector<int> arguments;             // symbol per slot, repeats for degenerate systems
  std::vector<SymbolParts> unknowns;      // distinct permutations, sorted
  std::vector<SymbolCombination::Factors> rhs_columns;
  ExactMatrix matrix;                     // rows x unknowns
  ExactMatrix rhs;                        // rows x rhs_columns (identity: matrix*z + rhs*a = 0)
  std::vector<SymbolCombination> rows;    // the identity behind each row
};

/// Formal three-point relation for symbols (a,b,c).
inline SymbolCombination formal_three_point(int a, int b, int c) {
  using C = SymbolCombination;
  const SymbolSum A(a), B(b), Cc(c), ABC(std::vector<int>{a, b, c});
  C out;
  out.add({{A, B, Cc}}, 1);
  out.add({{B, Cc, A}}, 1);
  out.add({{Cc, A, B}}, 1);
  out.add({{ABC}}, -1);
  out.add({{A}, {B, Cc}}, -1);
  out.add({{B}, {Cc, A}}, -1);
  out.add({{Cc}, {A, B}}, -1);
  out.add({{A}, {B}, {Cc}}, 1);
  return out;
}

/// All permutation identities stuffle(left,right) - zeta(left)zeta(right) for
/// every distinct ordering of `arguments` and every split point.
inline PermutationSystem assemble_permutation_system(const std::vector<int>& arguments, bool with_three_point = false) {
  const int l = static_cast<int>(arguments.size());
  if (l < 2) throw std::invalid_argument("permutation systems need l >= 2");
  PermutationSystem sys;
  sys.length = l;
  sys.arguments = arguments;
  std::vector<int> perm = arguments;
  std::sort(perm.begin(), perm.end());
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& p : perms) {
    SymbolParts u;
    for (int s : p) u.emplace_back(s);
    sys.unknowns.push_back(std::move(u));
  }
  std::sort(sys.unknowns.begin(), sys.unknowns.end());

  for (const auto& p : perms)
    for (int split = 1; split < l; ++split) {
      SymbolParts left, right;
      for (int i = 0; i < l; ++i) (i < split ? left : right).emplace_back(p[i]);
      SymbolCombination id = stuffle(left, right);
      id.add({left, right}, -1);
      sys.rows.push_back(std::move(id));
    }
  if (with_three_point && l == 3)
    for (const auto& p : perms) sys.rows.push_back(formal_three_point(p[0], p[1], p[2]));

  std::map<SymbolParts, std::size_t> unknown_index;
  for (std::size_t i = 0; i < sys.unknowns.size(); ++i) unknown_index[sys.unknowns[i]] = i;
  std::map<SymbolCombination::Factors, std::size_t, FactorListLess<SymbolSum>> rhs_index;
  for (const auto& row : sys.rows)
    for (const auto& [f, c] : row.map())
      if (!(f.size() == 1 && unknown_index.count(f[0]))) rhs_index.emplace(f, 0);
  for (auto& [f, idx] : rhs_index) {
    idx = sys.rhs_columns.size();
    sys.rhs_columns.push_back(f);
  }

  std::vector<std::string> ulab, rlab;
  for (const auto& u : sys.unknowns) ulab.push_back(format_symbol_parts(u));
  for (const auto& f : sys.rhs_columns) rlab.push_back(format_combination(SymbolCombination::product(f)));
  sys.matrix = ExactMatrix(0, ulab);
  sys.rhs = ExactMatrix(0, rlab);
  for (const auto& row : sys.rows) {
    std::vector<Rational> a(ulab.size()), b(rlab.size());
    for (const auto& [f, c] : row.map()) {
      if (f.size() == 1 && unknown_index.count(f[0]))
        a[unknown_index[f[0]]] += c;
      else
        b[rhs_index[f]] += c;
    }
    sys.matrix.append_row(a);
    sys.rhs.append_row(b);
  }
  return sys;
}

/// Generic system: l distinct symbols 0..l-1.
inline PermutationSystem assemble_permutation_system(int l, bool with_three_point = false) {
  std::vector<int> args(static_cast<std::size_t>(std::max(l, 0)));
  for (int i = 0; i < l; ++i) args[static_cast<std::size_t>(i)] = i;
  return assemble_permutation_system(args, with_three_point);
}

/// Degeneracy pattern such as "abc", "abb", "aaa" mapped to symbol ids.
inline std::vector<int> parse_degeneracy(const std::string& pattern) {
  std::vector<int> args;
  std::map<char, int> ids;
  for (char ch : pattern) {
    if (ch == ',' || ch == ' ') continue;
    auto [it, inserted] = ids.emplace(ch, static_cast<int>(ids.size()));
    args.push_back(it->second);
  }
  if (args.size() < 2) throw std::invalid_argument("degeneracy pattern needs at least two slots");
  return args;
}

struct BasisReport {
  int length = 0;
  std::size_t rows = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  bool canonical = false;  // basis is the fixed-first-argument family
  std::vector<SymbolParts> basis;
  std::vector<std::pair<SymbolParts, SymbolCombination>> expressions;  // unknown = expression
};

/// Rank of the generic length-l system and the expressions of all other
/// unknowns over the (l-1)! unknowns starting with the first symbol.
inline BasisReport reduce_to_basis(int l) {
  if (l < 2 || l > 5) throw std::invalid_argument("reduce_to_basis supports 2 <= l <= 5");
  const auto sys = assemble_permutation_system(l);
  BasisReport rep;
  rep.length = l;
  rep.rows = sys.matrix.rows();
  rep.unknowns = sys.unknowns.size();
  rep.rank = rank(sys.matrix);

  std::vector<std::size_t> basis_cols, other_cols;
  for (std::size_t j = 0; j < sys.unknowns.size(); ++j)
    (sys.unknowns[j].front() == SymbolSum(0) ? basis_cols : other_cols).push_back(j);
  rep.canonical = rep.rank == other_cols.size() && rank(sys.matrix.select_columns(other_cols)) == other_cols.size();

  // column order: non-basis candidates, basis candidates, rhs
  std::vector<std::size_t> order = other_cols;
  order.insert(order.end(), basis_cols.begin(), basis_cols.end());
  std::vector<std::string> labels;
  for (auto j : order) labels.push_back(sys.matrix.labels()[j]);
  for (const auto& s : sys.rhs.labels()) labels.push_back("rhs:" + s);
  // the expressions only need a maximal independent row set of M
  auto keep = detail::bareiss_pivot_rows(sys.matrix);
  std::sort(keep.begin(), keep.end());
  ExactMatrix aug(0, labels);
  for (std::size_t i : keep) {
    std::vector<Rational> row;
    for (auto j : order) row.push_back(sys.matrix(i, j));
    for (std::size_t j = 0; j < sys.rhs.cols(); ++j) row.push_back(sys.rhs(i, j));
    aug.append_row(row);
  }
  const auto pivots = rref(aug);
  const std::size_t nu = order.size();
  std::vector<bool> is_pivot(nu, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t pc = pivots[r];
    if (pc >= nu) continue;  // inconsistent against rhs symbols; cannot occur for identities
    is_pivot[pc] = true;
    SymbolCombination expr;
    for (std::size_t j = pc + 1; j < aug.cols(); ++j) {
      if (aug(r, j) == 0) continue;
      if (j < nu)
        expr.add({sys.unknowns[order[j]]}, -aug(r, j));
      else
        expr.add(sys.rhs_columns[j - nu], -aug(r, j));
    }
    rep.expressions.push_back({sys.unknowns[order[pc]], std::move(expr)});
  }
  for (std::size_t j = 0; j < nu; ++j)
    if (!is_pivot[j]) rep.basis.push_back(sys.unknowns[order[j]]);
  return rep;
}

}  // namespace mzv
