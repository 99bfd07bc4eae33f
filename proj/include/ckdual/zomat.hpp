#pragma once

// {0,1} matrices, their digraph predicates, and finitely described
// right-stable infinite matrices ("seeds").
//
// Indices are 0-based in this API; documents and reports use the 1-based
// convention and convert at the boundary.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ckdual/intmat.hpp"

namespace ckdual {

class ZeroOneMatrix {
 public:
  ZeroOneMatrix() = default;
  explicit ZeroOneMatrix(std::size_t n);
  ZeroOneMatrix(std::initializer_list<std::initializer_list<int>> rows);

  /// Throws DimensionMismatch for non-square input and std::invalid_argument
  /// for entries outside {0,1}.
  static ZeroOneMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, int value);

  ZeroOneMatrix transpose() const;
  /// Simultaneous exchange of rows a,b and columns a,b.
  ZeroOneMatrix conjugate_swap(std::size_t a, std::size_t b) const;
  ZeroOneMatrix top_left(std::size_t n) const;
  bool has_zero_row_or_column() const;

  IntMatrix to_int() const;
  std::vector<std::vector<int>> to_rows() const;
  std::string to_string() const;

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Strongly connected digraph i -> j iff m(i,j) = 1, every vertex lying on a
/// cycle (so [[0]] is not irreducible).
bool is_irreducible(const ZeroOneMatrix& m);
bool is_permutation(const ZeroOneMatrix& m);

/// A matrix known to be irreducible and not a permutation: its
/// Cuntz-Krieger algebra is simple and purely infinite.
class CkMatrix {
 public:
  const ZeroOneMatrix& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.size(); }

 private:
  explicit CkMatrix(ZeroOneMatrix m) : m_(std::move(m)) {}
  friend CkMatrix validate_ck(const ZeroOneMatrix& m);
  ZeroOneMatrix m_;
};

/// Throws NotIrreducible or IsPermutation.
CkMatrix validate_ck(const ZeroOneMatrix& m);

// Tail rules -----------------------------------------------------------------

/// The infinite matrix built from a finite N×N matrix: transpose in the top
/// left, a column of ones at N+1, an all-ones row N+1, and rows past N+1
/// equal to ones on columns 1..N+1.
struct HatTail {
  ZeroOneMatrix base;
};

/// Every entry equal to one.
struct AllOnesTail {};

/// Rows 1,2 carry the two unit vectors followed by ones; row i >= 3 has ones
/// exactly at columns i-2 and i.
struct PInfinityTail {};

/// Explicit rows for levels K+1 .. K+m. rows[r] lists the entries of matrix
/// row K+1+r in columns 1 .. K+1+r (diagonal included); c[r] is its
/// row-type value. Entries above the diagonal past column K are forced by
/// right stability.
struct ExplicitTail {
  std::vector<std::vector<int>> rows;
  std::vector<int> c;
  bool assumed_drs = false;
};

using TailRule = std::variant<HatTail, AllOnesTail, PInfinityTail, ExplicitTail>;

std::string tail_name(const TailRule& tail);

class StableSeed {
 public:
  /// Validates the block against the tail rule; throws InvalidSeed.
  StableSeed(std::size_t k, ZeroOneMatrix a_k, std::vector<int> c, TailRule tail);

  static StableSeed all_ones(std::size_t k = 1);
  static StableSeed p_infinity(std::size_t k = 2);
  /// Hat seed at the canonical level N+1. The base is not validated here.
  static StableSeed hat(const ZeroOneMatrix& base);
  /// Any seed with only the block data; rows past K come from the rule.
  static StableSeed explicit_levels(std::size_t k, ZeroOneMatrix a_k, std::vector<int> c,
                                    ExplicitTail tail);

  std::size_t k() const noexcept { return k_; }
  const ZeroOneMatrix& block() const noexcept { return a_k_; }
  const std::vector<int>& c() const noexcept { return c_; }
  const TailRule& tail() const noexcept { return tail_; }

  /// Largest level the tail describes; nullopt when every level is covered.
  std::optional<std::size_t> max_level() const;
  bool covers(std::size_t n) const;
  bool closed_form() const noexcept { return !std::holds_alternative<ExplicitTail>(tail_); }

 private:
  std::size_t k_;
  ZeroOneMatrix a_k_;
  std::vector<int> c_;
  TailRule tail_;
};

struct SeedLevel {
  ZeroOneMatrix a;     // A_n
  std::vector<int> c;  // c_1 .. c_n
};

/// A_n and C_n for n >= K. Throws TailNotCovered, or std::invalid_argument
/// when n < K.
SeedLevel expand_seed(const StableSeed& s, std::size_t n);

struct LevelCheck {
  std::size_t level = 0;
  bool irreducible = false;
  /// Column and diagonal conditions for the step level -> level+1; absent
  /// for the last checked level.
  std::optional<bool> rs;
  std::optional<bool> dc;
};

struct PropertyReport {
  bool rsf = false;
  bool rs = false;
  bool dc = false;
  bool drs = false;
  /// Largest checked level n with A_K, ..., A_n all irreducible.
  std::optional<std::size_t> li_up_to;
  /// Smallest checked level from which every checked A_n is irreducible.
  std::optional<std::size_t> li_from;
  bool li_all_checked = false;
  /// The tail family guarantees the reported (RS)/(DC)/(LI) status at every level.
  bool closed_form = false;
  /// Set when the checked levels are all the evidence available.
  bool assumed_beyond = false;
  std::string note;
  std::vector<LevelCheck> levels;
};

/// Checks levels K .. K+depth. Throws TailNotCovered.
PropertyReport check_seed_properties(const StableSeed& s, std::size_t depth);

/// Default depth: 4 for closed-form tails, all covered levels otherwise.
std::size_t default_check_depth(const StableSeed& s);

struct Certification {
  bool certified = false;
  std::vector<std::string> assumptions;
  std::string reason;
};

/// Whether (DRS)+(LI) are established for s: by the tail family, or by
/// checked levels plus an explicit assumption (tail flag or `assume_drs_li`).
Certification certify_drs_li(const StableSeed& s, bool assume_drs_li = false);
/// Throws HypothesisNotCertified when certify_drs_li fails.
Certification require_drs_li(const StableSeed& s, bool assume_drs_li = false);

}  // namespace ckdual
