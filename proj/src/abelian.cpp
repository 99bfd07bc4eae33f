#include "ckdual/abelian.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "ckdual/errors.hpp"

namespace ckdual {

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(const IntVector& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = abs(orders[i]);
  return Cokernel(std::move(diag)).group();
}

FgAbelianGroup FgAbelianGroup::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed group string: " + std::string(text)); };
  if (text == "0") return {};
  IntVector orders;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t end = text.find(" (+) ", pos);
    const std::string_view term = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    if (term == "Z") {
      orders.emplace_back(0);
    } else if (term.starts_with("Z^") || term.starts_with("Z/")) {
      const std::string digits(term.substr(2));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) fail();
      const Int n(digits);
      if (term[1] == '^') {
        for (Int k = 0; k < n; ++k) orders.emplace_back(0);
      } else {
        if (n < 2) fail();
        orders.push_back(n);
      }
    } else {
      fail();
    }
    if (end == std::string_view::npos) break;
    pos = end + 5;
  }
  return from_cyclic_orders(orders);
}

Int FgAbelianGroup::torsion_order() const {
  Int n = 1;
  for (const Int& t : torsion) n *= t;
  return n;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " (+) ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

bool groups_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  return g.free_rank == h.free_rank && g.torsion == h.torsion;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  IntVector orders = g.torsion;
  orders.insert(orders.end(), h.torsion.begin(), h.torsion.end());
  orders.insert(orders.end(), g.free_rank + h.free_rank, Int(0));
  return FgAbelianGroup::from_cyclic_orders(orders);
}

Cokernel::Cokernel(IntMatrix relations)
    : relations_(std::move(relations)), snf_(smith_normal_form(relations_)) {
  const std::size_t rank = snf_.rank();
  for (std::size_t i = 0; i < rank; ++i) {
    if (snf_.d(i, i) == 1) continue;
    slots_.push_back(i);
    moduli_.push_back(snf_.d(i, i));
    group_.torsion.push_back(snf_.d(i, i));
  }
  for (std::size_t i = rank; i < relations_.rows(); ++i) {
    slots_.push_back(i);
    moduli_.emplace_back(0);
  }
  group_.free_rank = relations_.rows() - rank;
}

IntVector Cokernel::coordinates(const IntVector& x) const {
  if (x.size() != ambient()) throw DimensionMismatch("cokernel coordinates: length mismatch");
  const IntVector y = snf_.u * x;
  IntVector out(slots_.size());
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    if (moduli_[k] == 0) {
      out[k] = y[slots_[k]];
    } else {
      mpz_fdiv_r(out[k].get_mpz_t(), y[slots_[k]].get_mpz_t(), moduli_[k].get_mpz_t());
    }
  }
  return out;
}

IntVector Cokernel::representative(const IntVector& coords) const {
  if (coords.size() != slots_.size()) throw DimensionMismatch("representative: coordinate count");
  IntVector y(ambient());
  for (std::size_t k = 0; k < slots_.size(); ++k) y[slots_[k]] = coords[k];
  return snf_.u_inverse * y;
}

IntVector Cokernel::generator(std::size_t k) const {
  IntVector e(slots_.size());
  e.at(k) = 1;
  return representative(e);
}

bool Cokernel::is_zero(const IntVector& x) const { return ckdual::is_zero(coordinates(x)); }

bool Cokernel::same_class(const IntVector& x, const IntVector& y) const {
  return is_zero(x + (-y));
}

std::optional<Int> Cokernel::order(const IntVector& x) const {
  const IntVector c = coordinates(x);
  Int n = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (moduli_[k] == 0) {
      if (c[k] != 0) return std::nullopt;
      continue;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), c[k].get_mpz_t(), moduli_[k].get_mpz_t());
    const Int part = moduli_[k] / g;
    mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), part.get_mpz_t());
  }
  return n;
}

Cokernel cokernel_presentation(const IntMatrix& m) { return Cokernel(m); }

MarkedGroup::MarkedGroup(IntMatrix presentation, IntVector raw)
    : cokernel_(std::move(presentation)), raw_(std::move(raw)) {
  element_ = cokernel_.coordinates(raw_);
}

std::optional<Int> element_order(const MarkedGroup& p) { return p.cokernel().order(p.raw()); }

FgAbelianGroup quotient_by_element(const MarkedGroup& p) {
  return Cokernel(p.presentation().hconcat(IntMatrix::column_vector(p.raw()))).group();
}

PairInvariant pair_invariant(const MarkedGroup& p) {
  return PairInvariant{p.group(), quotient_by_element(p)};
}

bool pairs_equivalent(const MarkedGroup& p, const MarkedGroup& q) {
  const PairInvariant a = pair_invariant(p);
  const PairInvariant b = pair_invariant(q);
  return groups_isomorphic(a.group, b.group) && groups_isomorphic(a.quotient, b.quotient);
}

InducedMap induced_map(const Cokernel& source, const Cokernel& target, const IntMatrix& lift) {
  if (lift.rows() != target.ambient() || lift.cols() != source.ambient())
    throw DimensionMismatch("induced_map: lift has the wrong shape");
  InducedMap out;
  out.well_defined = lattice_contains(target.relations(), lift * source.relations());
  out.surjective = Cokernel(lift.hconcat(target.relations())).group().is_trivial();

  // Preimage of im(T) under the lift, as generators: x-part of ker [lift | -T].
  const KernelBasis pre = kernel_basis(lift.hconcat(-target.relations()));
  IntMatrix preimage(source.ambient(), pre.rank());
  for (std::size_t k = 0; k < pre.rank(); ++k)
    for (std::size_t i = 0; i < source.ambient(); ++i) preimage(i, k) = pre.vectors[k][i];
  out.injective = lattice_contains(source.relations(), preimage);

  out.on_generators = IntMatrix(target.generator_count(), source.generator_count());
  for (std::size_t k = 0; k < source.generator_count(); ++k) {
    const IntVector img = target.coordinates(lift * source.generator(k));
    for (std::size_t i = 0; i < img.size(); ++i) out.on_generators(i, k) = img[i];
  }
  return out;
}

bool LatticeMap::isomorphism() const {
  if (!well_defined || matrix.rows() != matrix.cols()) return false;
  return abs(determinant(matrix)) == 1;
}

LatticeMap lattice_map(const KernelBasis& source, const KernelBasis& target, const IntMatrix& lift) {
  if (lift.rows() != target.ambient || lift.cols() != source.ambient)
    throw DimensionMismatch("lattice_map: lift has the wrong shape");
  LatticeMap out;
  out.well_defined = true;
  out.matrix = IntMatrix(target.rank(), source.rank());
  const IntMatrix basis = target.as_matrix();
  for (std::size_t k = 0; k < source.rank(); ++k) {
    const auto z = image_membership(basis, lift * source.vectors[k]);
    if (!z) {
      out.well_defined = false;
      continue;
    }
    for (std::size_t i = 0; i < z->size(); ++i) out.matrix(i, k) = (*z)[i];
  }
  return out;
}

}  // namespace ckdual
