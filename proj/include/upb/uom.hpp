#pragma once

// Symbolic orthogonal matrices of multiqubit product states.
//
// An entry is a vector variable: the token x stands for one member of an
// orthonormal qubit basis {x, x'}, scoped to the column it appears in.  Two
// entries are orthogonal exactly when they are the two members of one such
// pair; entries of distinct families are generic (neither orthogonal nor
// parallel).  A matrix is orthogonal when every pair of distinct rows has at
// least one column with orthogonal entries.
//
// Text format: one row per line, entries whitespace-separated, entry grammar
// `token` or `token'` with token = [A-Za-z][A-Za-z0-9_]*.  The literals 0 and
// 1 are accepted and normalised to the per-column family "std" (1 being the
// prime of 0).  Tokens are column-scoped: the same token in two different
// columns denotes two different families.  Lines starting with '#' are
// comments.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upb/errors.hpp"

namespace upb {

using RowMask = std::uint64_t;

inline constexpr int kMaxRows = 64;  // rows are tracked in 64-bit masks
inline constexpr int kMaxCols = 32;

struct VectorVar {
  int column = 0;
  int family = 0;  // index into the owning matrix's family table
  bool primed = false;

  friend bool operator==(const VectorVar&, const VectorVar&) = default;
};

inline VectorVar partner(VectorVar v) { return {v.column, v.family, !v.primed}; }

inline bool orthogonal(VectorVar a, VectorVar b) {
  return a.column == b.column && a.family == b.family && a.primed != b.primed;
}

struct Family {
  int column = 0;
  std::string token;
};

class Uom {
public:
  struct EntrySpec {
    std::string token;
    bool primed = false;

    friend bool operator==(const EntrySpec&, const EntrySpec&) = default;
  };
  using Grid = std::vector<std::vector<EntrySpec>>;

  Uom() = default;

  // Parses the text format.  With validate on, a matrix whose rows are not
  // pairwise orthogonal is rejected; with validate off the matrix is still
  // constructed and validated() reports the outcome (parse-only audit mode).
  static Uom parse(std::string_view text, bool validate = true) {
    Grid grid;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      std::string_view line = (eol == std::string_view::npos)
                                  ? text.substr(pos)
                                  : text.substr(pos, eol - pos);
      pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
      ++line_no;
      std::vector<std::string_view> toks = split_ws(line);
      if (toks.empty() || toks[0].front() == '#') continue;
      std::vector<EntrySpec> row;
      row.reserve(toks.size());
      for (std::string_view t : toks) row.push_back(parse_entry(t, line_no));
      grid.push_back(std::move(row));
    }
    return from_grid(grid, validate);
  }

  // Builds from an in-memory grid of (token, primed) entries; tokens are
  // column-scoped just as in the text format.
  static Uom from_grid(const Grid& grid, bool validate = true) {
    Uom u;
    u.rows_ = static_cast<int>(grid.size());
    u.cols_ = u.rows_ == 0 ? 0 : static_cast<int>(grid[0].size());
    if (u.rows_ > kMaxRows)
      throw TooLarge("matrix exceeds " + std::to_string(kMaxRows) + " rows");
    if (u.cols_ > kMaxCols)
      throw TooLarge("matrix exceeds " + std::to_string(kMaxCols) + " columns");
    u.column_families_.resize(u.cols_);
    std::map<std::pair<int, std::string>, int> ids;
    for (int i = 0; i < u.rows_; ++i) {
      if (static_cast<int>(grid[i].size()) != u.cols_)
        throw ParseError(ParseError::Kind::RaggedRow,
                         "row " + std::to_string(i + 1) + " has " +
                             std::to_string(grid[i].size()) + " entries, expected " +
                             std::to_string(u.cols_));
      for (int j = 0; j < u.cols_; ++j) {
        const EntrySpec& e = grid[i][j];
        auto [it, fresh] = ids.try_emplace({j, e.token}, static_cast<int>(u.families_.size()));
        if (fresh) {
          u.families_.push_back({j, e.token});
          u.column_families_[j].push_back(it->second);
        }
        u.entries_.push_back({j, it->second, e.primed});
      }
    }
    u.run_validation();
    if (validate && !u.validated_)
      throw ParseError(ParseError::Kind::NotOrthogonal,
                       "rows " + std::to_string(u.viol_a_ + 1) + " and " +
                           std::to_string(u.viol_b_ + 1) +
                           " have no orthogonal column");
    return u;
  }

  // Low-level constructor from explicit vector variables and a family table.
  // Rejects entries placed outside their declared column (family leak).
  static Uom from_vector_vars(int rows, int cols, std::vector<VectorVar> entries,
                              std::vector<Family> families, bool validate = true) {
    if (rows > kMaxRows || cols > kMaxCols) throw TooLarge("matrix too large");
    if (static_cast<int>(entries.size()) != rows * cols)
      throw DomainError("entry grid size mismatch");
    Uom u;
    u.rows_ = rows;
    u.cols_ = cols;
    u.entries_ = std::move(entries);
    u.families_ = std::move(families);
    u.column_families_.resize(cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        VectorVar v = u.entries_[static_cast<std::size_t>(i) * cols + j];
        if (v.family < 0 || v.family >= static_cast<int>(u.families_.size()))
          throw DomainError("entry references unknown family");
        if (v.column != j || u.families_[v.family].column != j)
          throw ParseError(ParseError::Kind::FamilyLeak,
                           "family '" + u.families_[v.family].token +
                               "' used outside its column");
        auto& col = u.column_families_[j];
        if (std::find(col.begin(), col.end(), v.family) == col.end())
          col.push_back(v.family);
      }
    u.run_validation();
    if (validate && !u.validated_)
      throw ParseError(ParseError::Kind::NotOrthogonal,
                       "rows " + std::to_string(u.viol_a_ + 1) + " and " +
                           std::to_string(u.viol_b_ + 1) +
                           " have no orthogonal column");
    return u;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  VectorVar at(int i, int j) const {
    check_row(i);
    check_col(j);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const Family& family(int id) const { return families_.at(static_cast<std::size_t>(id)); }
  int family_count() const { return static_cast<int>(families_.size()); }

  // Family ids of one column, in first-occurrence order.
  const std::vector<int>& column_families(int j) const {
    check_col(j);
    return column_families_[j];
  }

  std::string entry_text(VectorVar v) const {
    std::string s = families_[static_cast<std::size_t>(v.family)].token;
    if (v.primed) s.push_back('\'');
    return s;
  }

  bool validated() const { return validated_; }

  // First offending row pair when validation failed, 0-based.
  std::pair<int, int> first_violation() const { return {viol_a_, viol_b_}; }

  void require_validated(const char* op) const {
    if (!validated_)
      throw UnvalidatedMatrix(std::string(op) + " requires a validated orthogonal matrix");
  }

  std::string serialize() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (j) out.push_back(' ');
        out += entry_text(at(i, j));
      }
      out.push_back('\n');
    }
    return out;
  }

  Grid grid() const {
    Grid g(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      g[i].reserve(cols_);
      for (int j = 0; j < cols_; ++j) {
        VectorVar v = at(i, j);
        g[i].push_back({families_[static_cast<std::size_t>(v.family)].token, v.primed});
      }
    }
    return g;
  }

  // Columns where rows i and k hold an {x, x'} pair, ascending.
  std::vector<int> orthogonal_columns(int i, int k) const {
    check_row(i);
    check_row(k);
    if (i == k) throw IndexError("orthogonal_columns requires two distinct rows");
    std::vector<int> cols;
    for (int j = 0; j < cols_; ++j)
      if (orthogonal(at(i, j), at(k, j))) cols.push_back(j);
    return cols;
  }

  int multiplicity(VectorVar v) const {
    int count = 0;
    for (const VectorVar& e : entries_)
      if (e == v) ++count;
    return count;
  }

  // Multiplicity by (column, token, primed); 0 when the token is absent.
  int multiplicity(int column, std::string_view token, bool primed) const {
    check_col(column);
    for (int id : column_families_[column])
      if (families_[static_cast<std::size_t>(id)].token == token)
        return multiplicity({column, id, primed});
    return 0;
  }

  RowMask rows_with(VectorVar v) const {
    RowMask mask = 0;
    for (int i = 0; i < rows_; ++i)
      if (at(i, v.column) == v) mask |= RowMask{1} << i;
    return mask;
  }

  RowMask all_rows_mask() const {
    return rows_ == 64 ? ~RowMask{0} : (RowMask{1} << rows_) - 1;
  }

  // Structural equality: same shape and the same (token, primed) in each cell.
  bool structurally_equal(const Uom& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        VectorVar a = at(i, j), b = o.at(i, j);
        if (a.primed != b.primed) return false;
        if (families_[static_cast<std::size_t>(a.family)].token !=
            o.families_[static_cast<std::size_t>(b.family)].token)
          return false;
      }
    return true;
  }

private:
  void check_row(int i) const {
    if (i < 0 || i >= rows_) throw IndexError("row index " + std::to_string(i) + " out of range");
  }
  void check_col(int j) const {
    if (j < 0 || j >= cols_) throw IndexError("column index " + std::to_string(j) + " out of range");
  }

  void run_validation() {
    validated_ = true;
    viol_a_ = viol_b_ = -1;
    for (int i = 0; i < rows_ && validated_; ++i)
      for (int k = i + 1; k < rows_; ++k) {
        bool ok = false;
        for (int j = 0; j < cols_ && !ok; ++j)
          ok = orthogonal(at(i, j), at(k, j));
        if (!ok) {
          validated_ = false;
          viol_a_ = i;
          viol_b_ = k;
          break;
        }
      }
  }

  static std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
  }

  static EntrySpec parse_entry(std::string_view tok, int line_no) {
    bool primed = false;
    if (!tok.empty() && tok.back() == '\'') {
      primed = true;
      tok.remove_suffix(1);
    }
    auto fail = [&]() -> ParseError {
      return ParseError(ParseError::Kind::MalformedEntry,
                        "line " + std::to_string(line_no) + ": bad entry token");
    };
    if (tok.empty()) throw fail();
    if (tok == "0" || tok == "1") {
      if (primed) throw fail();  // write the partner literal instead
      return {"std", tok == "1"};
    }
    if (!std::isalpha(static_cast<unsigned char>(tok.front()))) throw fail();
    for (char c : tok)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') throw fail();
    return {std::string(tok), primed};
  }

  int rows_ = 0, cols_ = 0;
  std::vector<VectorVar> entries_;
  std::vector<Family> families_;
  std::vector<std::vector<int>> column_families_;
  bool validated_ = true;
  int viol_a_ = -1, viol_b_ = -1;
};

inline Uom parse_uom(std::string_view text, bool validate = true) {
  return Uom::parse(text, validate);
}

inline std::string serialize_uom(const Uom& u) { return u.serialize(); }

}  // namespace upb
