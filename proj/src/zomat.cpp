#include "ckdual/zomat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ckdual/errors.hpp"

namespace ckdual {

ZeroOneMatrix::ZeroOneMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

ZeroOneMatrix::ZeroOneMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : ZeroOneMatrix(from_rows(std::vector<std::vector<int>>(rows.begin(), rows.end()))) {}

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  ZeroOneMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw DimensionMismatch("{0,1} matrix must be square (row " + std::to_string(i + 1) +
                              " has " + std::to_string(rows[i].size()) + " entries)");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void ZeroOneMatrix::set(std::size_t i, std::size_t j, int value) {
  if (value != 0 && value != 1)
    throw std::invalid_argument("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") is not 0 or 1");
  data_.at(i * n_ + j) = static_cast<std::uint8_t>(value);
}

ZeroOneMatrix ZeroOneMatrix::transpose() const {
  ZeroOneMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t.data_[j * n_ + i] = data_[i * n_ + j];
  return t;
}

ZeroOneMatrix ZeroOneMatrix::conjugate_swap(std::size_t a, std::size_t b) const {
  if (a >= n_ || b >= n_) throw std::out_of_range("conjugate_swap index");
  auto p = [&](std::size_t i) { return i == a ? b : (i == b ? a : i); };
  ZeroOneMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.data_[i * n_ + j] = data_[p(i) * n_ + p(j)];
  return out;
}

ZeroOneMatrix ZeroOneMatrix::top_left(std::size_t n) const {
  if (n > n_) throw std::out_of_range("top_left larger than matrix");
  ZeroOneMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.data_[i * n + j] = data_[i * n_ + j];
  return out;
}

bool ZeroOneMatrix::has_zero_row_or_column() const {
  for (std::size_t i = 0; i < n_; ++i) {
    bool row = false, col = false;
    for (std::size_t j = 0; j < n_; ++j) {
      row = row || (*this)(i, j);
      col = col || (*this)(j, i);
    }
    if (!row || !col) return true;
  }
  return false;
}

IntMatrix ZeroOneMatrix::to_int() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

std::vector<std::vector<int>> ZeroOneMatrix::to_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  return rows;
}

std::string ZeroOneMatrix::to_string() const { return to_int().to_string(); }

namespace {

std::vector<bool> reachable_from_first(const ZeroOneMatrix& m, bool reversed) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      const int edge = reversed ? m(w, v) : m(v, w);
      if (edge && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_irreducible(const ZeroOneMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  if (n == 1) return m(0, 0) == 1;
  const auto fwd = reachable_from_first(m, false);
  const auto bwd = reachable_from_first(m, true);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

bool is_permutation(const ZeroOneMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    int row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += m(i, j);
      col += m(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

CkMatrix validate_ck(const ZeroOneMatrix& m) {
  if (!is_irreducible(m)) throw NotIrreducible();
  if (is_permutation(m)) throw IsPermutation();
  return CkMatrix(m);
}

// Seeds ----------------------------------------------------------------------

std::string tail_name(const TailRule& tail) {
  struct Visitor {
    std::string operator()(const HatTail&) const { return "hat"; }
    std::string operator()(const AllOnesTail&) const { return "all-ones"; }
    std::string operator()(const PInfinityTail&) const { return "p-infinity"; }
    std::string operator()(const ExplicitTail&) const { return "explicit"; }
  };
  return std::visit(Visitor{}, tail);
}

namespace {

// Entry and row type of the closed-form families, 0-based.
int closed_entry(const TailRule& tail, std::size_t i, std::size_t j) {
  if (std::holds_alternative<AllOnesTail>(tail)) return 1;
  if (std::holds_alternative<PInfinityTail>(tail)) {
    if (i == 0) return j == 1 ? 0 : 1;
    if (i == 1) return j == 0 ? 0 : 1;
    return (j + 2 == i || j == i) ? 1 : 0;
  }
  const ZeroOneMatrix& base = std::get<HatTail>(tail).base;
  const std::size_t n = base.size();
  if (i < n && j < n) return base(j, i);
  if (i < n) return j == n ? 1 : 0;
  if (i == n) return 1;
  return j <= n ? 1 : 0;
}

int closed_c(const TailRule& tail, std::size_t i) {
  if (std::holds_alternative<AllOnesTail>(tail)) return 1;
  if (std::holds_alternative<PInfinityTail>(tail)) return i < 2 ? 1 : 0;
  return i == std::get<HatTail>(tail).base.size() ? 1 : 0;
}

std::size_t canonical_k(const TailRule& tail) {
  if (std::holds_alternative<AllOnesTail>(tail)) return 1;
  if (std::holds_alternative<PInfinityTail>(tail)) return 2;
  return std::get<HatTail>(tail).base.size() + 1;
}

}  // namespace

StableSeed::StableSeed(std::size_t k, ZeroOneMatrix a_k, std::vector<int> c, TailRule tail)
    : k_(k), a_k_(std::move(a_k)), c_(std::move(c)), tail_(std::move(tail)) {
  if (k_ == 0) throw InvalidSeed("K must be at least 1");
  if (a_k_.size() != k_)
    throw InvalidSeed("block is " + std::to_string(a_k_.size()) + "x" +
                      std::to_string(a_k_.size()) + " but K = " + std::to_string(k_));
  if (c_.size() != k_) throw InvalidSeed("c must have K entries");
  for (int x : c_)
    if (x != 0 && x != 1) throw InvalidSeed("c entries must be 0 or 1");
  if (std::find(c_.begin(), c_.end(), 1) == c_.end())
    throw InvalidSeed("some c_i with i <= K must equal 1");

  if (closed_form()) {
    if (const auto* hat = std::get_if<HatTail>(&tail_); hat && hat->base.size() == 0)
      throw InvalidSeed("hat tail needs a non-empty base matrix");
    if (k_ < canonical_k(tail_))
      throw InvalidSeed(tail_name(tail_) + " tail is right stable only from K = " +
                        std::to_string(canonical_k(tail_)));
    for (std::size_t i = 0; i < k_; ++i) {
      if (c_[i] != closed_c(tail_, i))
        throw InvalidSeed("c_" + std::to_string(i + 1) + " disagrees with the " +
                          tail_name(tail_) + " tail");
      for (std::size_t j = 0; j < k_; ++j)
        if (a_k_(i, j) != closed_entry(tail_, i, j))
          throw InvalidSeed("block entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") disagrees with the " +
                            tail_name(tail_) + " tail");
    }
    return;
  }

  const auto& ex = std::get<ExplicitTail>(tail_);
  if (ex.rows.size() != ex.c.size())
    throw InvalidSeed("explicit tail needs one c value per row");
  for (std::size_t r = 0; r < ex.rows.size(); ++r) {
    if (ex.rows[r].size() != k_ + r + 1)
      throw InvalidSeed("explicit tail row for level " + std::to_string(k_ + r + 1) + " must have " +
                        std::to_string(k_ + r + 1) + " entries");
    for (int x : ex.rows[r])
      if (x != 0 && x != 1) throw InvalidSeed("explicit tail entries must be 0 or 1");
    if (ex.c[r] != 0 && ex.c[r] != 1) throw InvalidSeed("explicit tail c values must be 0 or 1");
  }
}

StableSeed StableSeed::all_ones(std::size_t k) {
  ZeroOneMatrix a(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a.set(i, j, 1);
  return StableSeed(k, a, std::vector<int>(k, 1), AllOnesTail{});
}

StableSeed StableSeed::p_infinity(std::size_t k) {
  const TailRule tail = PInfinityTail{};
  ZeroOneMatrix a(k);
  std::vector<int> c(k);
  for (std::size_t i = 0; i < k; ++i) {
    c[i] = closed_c(tail, i);
    for (std::size_t j = 0; j < k; ++j) a.set(i, j, closed_entry(tail, i, j));
  }
  return StableSeed(k, a, c, tail);
}

StableSeed StableSeed::hat(const ZeroOneMatrix& base) {
  const TailRule tail = HatTail{base};
  const std::size_t k = base.size() + 1;
  ZeroOneMatrix a(k);
  std::vector<int> c(k);
  for (std::size_t i = 0; i < k; ++i) {
    c[i] = closed_c(tail, i);
    for (std::size_t j = 0; j < k; ++j) a.set(i, j, closed_entry(tail, i, j));
  }
  return StableSeed(k, a, c, tail);
}

StableSeed StableSeed::explicit_levels(std::size_t k, ZeroOneMatrix a_k, std::vector<int> c,
                                       ExplicitTail tail) {
  return StableSeed(k, std::move(a_k), std::move(c), std::move(tail));
}

std::optional<std::size_t> StableSeed::max_level() const {
  if (closed_form()) return std::nullopt;
  return k_ + std::get<ExplicitTail>(tail_).rows.size();
}

bool StableSeed::covers(std::size_t n) const {
  const auto top = max_level();
  return n >= k_ && (!top || n <= *top);
}

SeedLevel expand_seed(const StableSeed& s, std::size_t n) {
  const std::size_t k = s.k();
  if (n < k)
    throw std::invalid_argument("level " + std::to_string(n) + " is below K = " + std::to_string(k));
  if (!s.covers(n)) throw TailNotCovered(n);

  SeedLevel out{ZeroOneMatrix(n), std::vector<int>(n)};
  if (s.closed_form()) {
    for (std::size_t i = 0; i < n; ++i) {
      out.c[i] = closed_c(s.tail(), i);
      for (std::size_t j = 0; j < n; ++j) out.a.set(i, j, closed_entry(s.tail(), i, j));
    }
    return out;
  }

  const auto& ex = std::get<ExplicitTail>(s.tail());
  for (std::size_t i = 0; i < n; ++i) out.c[i] = i < k ? s.c()[i] : ex.c[i - k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int v;
      if (i < k && j < k)
        v = s.block()(i, j);
      else if (i < j)
        v = out.c[i];  // column j > K above the diagonal is forced to c_i
      else
        v = ex.rows[i - k][j];
      out.a.set(i, j, v);
    }
  return out;
}

std::size_t default_check_depth(const StableSeed& s) {
  const auto top = s.max_level();
  return top ? *top - s.k() : 4;
}

PropertyReport check_seed_properties(const StableSeed& s, std::size_t depth) {
  const std::size_t k = s.k();
  const std::size_t top = k + depth;
  if (!s.covers(top)) throw TailNotCovered(top);

  PropertyReport rep;
  rep.rsf = std::find(s.c().begin(), s.c().end(), 1) != s.c().end();
  rep.rs = true;
  rep.dc = true;
  rep.li_all_checked = true;

  const SeedLevel full = expand_seed(s, top);
  for (std::size_t n = k; n <= top; ++n) {
    LevelCheck lc;
    lc.level = n;
    lc.irreducible = is_irreducible(full.a.top_left(n));
    if (n < top) {
      // Column n+1 (0-based index n) against c, then the diagonal entry.
      bool col = true;
      for (std::size_t i = 0; i < n; ++i) col = col && full.a(i, n) == full.c[i];
      lc.rs = col;
      lc.dc = full.a(n, n) == full.c[n];
      rep.rs = rep.rs && col;
      rep.dc = rep.dc && *lc.dc;
    }
    if (lc.irreducible && rep.li_all_checked) rep.li_up_to = n;
    rep.li_all_checked = rep.li_all_checked && lc.irreducible;
    if (!lc.irreducible)
      rep.li_from.reset();
    else if (!rep.li_from)
      rep.li_from = n;
    rep.levels.push_back(lc);
  }
  rep.drs = rep.rs && rep.dc;

  if (std::holds_alternative<AllOnesTail>(s.tail()) || std::holds_alternative<HatTail>(s.tail())) {
    rep.closed_form = true;
    rep.note = "closed-form: (DRS) and (LI) hold for all n";
  } else if (std::holds_alternative<PInfinityTail>(s.tail())) {
    rep.closed_form = true;
    // A_2 = I_2 and A_3 have unreachable vertices; from level 4 on the
    // two-step path through rows 1 and 2 connects everything.
    rep.note = "closed-form: (RS) for all n, not (DC); A_n irreducible exactly for n >= 4";
  } else {
    rep.assumed_beyond = true;
    rep.note = "checked up to level " + std::to_string(top) + "; levels beyond are not described";
  }
  return rep;
}

Certification certify_drs_li(const StableSeed& s, bool assume_drs_li) {
  Certification cert;
  if (std::holds_alternative<AllOnesTail>(s.tail()) || std::holds_alternative<HatTail>(s.tail())) {
    cert.certified = true;
    return cert;
  }
  if (std::holds_alternative<PInfinityTail>(s.tail())) {
    cert.reason = "p-infinity tail is (RS) and (LI) but violates the diagonal condition";
    return cert;
  }
  const PropertyReport rep = check_seed_properties(s, default_check_depth(s));
  if (!rep.rsf || !rep.drs || !rep.li_all_checked) {
    cert.reason = "explicit levels violate (DRS)+(LI) within the described range";
    return cert;
  }
  const bool flagged = std::get<ExplicitTail>(s.tail()).assumed_drs;
  if (!flagged && !assume_drs_li) {
    cert.reason = "explicit tail only certifies levels up to " + std::to_string(*s.max_level()) +
                  "; pass --assume-drs-li or set assumed_drs";
    return cert;
  }
  cert.certified = true;
  cert.assumptions.push_back("(DRS)+(LI) assumed beyond level " + std::to_string(*s.max_level()) +
                             (flagged ? " (declared in document)" : " (--assume-drs-li)"));
  return cert;
}

Certification require_drs_li(const StableSeed& s, bool assume_drs_li) {
  Certification cert = certify_drs_li(s, assume_drs_li);
  if (!cert.certified) throw HypothesisNotCertified(cert.reason);
  return cert;
}

}  // namespace ckdual
