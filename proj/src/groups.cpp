#include "bitradelab/groups.hpp"

#include <algorithm>
#include <sstream>

#include "bitradelab/errors.hpp"

namespace btl {

AbelianGroup AbelianGroup::canonical(std::size_t free_rank, std::vector<BigInt> factors) {
  for (const BigInt& f : factors)
    if (sgn(f) <= 0) fail(ErrorKind::invalid_params, "cyclic factor must be positive");
  std::erase_if(factors, [](const BigInt& f) { return f == 1; });
  bool chain = true;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    if (!divides(factors[i], factors[i + 1])) chain = false;
  if (!chain) {
    // Smith form of the diagonal relation matrix re-sorts into a chain.
    BigIntMatrix diag(factors.size(), factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) diag.at(i, i) = factors[i];
    std::vector<BigInt> d = snf(diag, Exec::serial).diagonal();
    factors.clear();
    for (BigInt& x : d)
      if (x != 1) factors.push_back(std::move(x));
  }
  return AbelianGroup{free_rank, std::move(factors)};
}

BigInt AbelianGroup::torsion_order() const {
  BigInt o = 1;
  for (const BigInt& f : invariant_factors) o *= f;
  return o;
}

std::string AbelianGroup::display() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank == 1) {
    out << "Z";
    first = false;
  } else if (free_rank > 1) {
    out << "Z^" << free_rank;
    first = false;
  }
  for (const BigInt& f : invariant_factors) {
    if (!first) out << " + ";
    out << "Z_" << f.get_str();
    first = false;
  }
  return out.str();
}

bool is_quotient_of(const AbelianGroup& q, const AbelianGroup& a) {
  if (!q.is_finite() || !a.is_finite())
    fail(ErrorKind::not_finite, "quotient test needs finite groups");
  const auto& qf = q.invariant_factors;
  const auto& af = a.invariant_factors;
  if (qf.size() > af.size()) return false;
  std::size_t off = af.size() - qf.size();  // pad q with leading 1s
  for (std::size_t i = 0; i < qf.size(); ++i)
    if (!divides(qf[i], af[off + i])) return false;
  return true;
}

GroupElement GroupElement::zero(const AbelianGroup& g) {
  GroupElement e;
  e.group = g;
  e.free_coords.assign(g.free_rank, BigInt(0));
  e.torsion_coords.assign(g.invariant_factors.size(), BigInt(0));
  return e;
}

bool GroupElement::is_zero() const {
  auto nz = [](const BigInt& x) { return sgn(x) != 0; };
  return std::none_of(free_coords.begin(), free_coords.end(), nz) &&
         std::none_of(torsion_coords.begin(), torsion_coords.end(), nz);
}

namespace {

void reduce_torsion(GroupElement& e) {
  for (std::size_t i = 0; i < e.torsion_coords.size(); ++i) {
    mpz_fdiv_r(e.torsion_coords[i].get_mpz_t(), e.torsion_coords[i].get_mpz_t(),
               e.group.invariant_factors[i].get_mpz_t());
  }
}

void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (!(a.group == b.group)) fail(ErrorKind::group_mismatch, "operands live in different groups");
}

}  // namespace

GroupElement element_add(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  GroupElement r = a;
  for (std::size_t i = 0; i < r.free_coords.size(); ++i) r.free_coords[i] += b.free_coords[i];
  for (std::size_t i = 0; i < r.torsion_coords.size(); ++i)
    r.torsion_coords[i] += b.torsion_coords[i];
  reduce_torsion(r);
  return r;
}

GroupElement element_neg(const GroupElement& x) {
  GroupElement r = x;
  for (BigInt& c : r.free_coords) c = -c;
  for (BigInt& c : r.torsion_coords) c = -c;
  reduce_torsion(r);
  return r;
}

GroupElement element_sub(const GroupElement& a, const GroupElement& b) {
  return element_add(a, element_neg(b));
}

std::optional<BigInt> element_order(const GroupElement& x) {
  for (const BigInt& c : x.free_coords)
    if (sgn(c) != 0) return std::nullopt;
  BigInt n = 1;
  for (std::size_t i = 0; i < x.torsion_coords.size(); ++i) {
    if (sgn(x.torsion_coords[i]) == 0) continue;
    const BigInt& d = x.group.invariant_factors[i];
    BigInt g = gcd(x.torsion_coords[i], d);
    n = lcm(n, BigInt(d / g));
  }
  return n;
}

const GroupElement& PresentedGroup::image_of(const std::string& name) const {
  for (std::size_t i = 0; i < generator_names.size(); ++i)
    if (generator_names[i] == name) return images[i];
  fail(ErrorKind::invalid_params, "unknown generator " + name);
}

PresentedGroup from_presentation(std::vector<std::string> generator_names,
                                 const BigIntMatrix& relation_rows, Exec ex) {
  const std::size_t gens = generator_names.size();
  if (relation_rows.cols() != gens && !(relation_rows.rows() == 0 && relation_rows.cols() == 0))
    fail(ErrorKind::dimension_mismatch, "one relation column per generator required");

  BigIntMatrix rel = relation_rows;
  if (rel.rows() == 0) rel = BigIntMatrix(0, gens);
  SnfResult s = snf(rel, ex);

  // Column i of the diagonal: d=1 dies, d=0 or i >= #relations is free,
  // otherwise torsion mod d.
  enum class Kind { dropped, free, torsion };
  std::vector<Kind> kind(gens, Kind::free);
  std::vector<BigInt> factors;
  std::size_t diag = std::min(rel.rows(), gens);
  for (std::size_t i = 0; i < gens; ++i) {
    if (i >= diag || sgn(s.d.at(i, i)) == 0) {
      kind[i] = Kind::free;
    } else if (s.d.at(i, i) == 1) {
      kind[i] = Kind::dropped;
    } else {
      kind[i] = Kind::torsion;
      factors.push_back(s.d.at(i, i));
    }
  }

  PresentedGroup pg;
  pg.generator_names = std::move(generator_names);
  pg.group = AbelianGroup{0, std::move(factors)};
  for (std::size_t i = 0; i < gens; ++i)
    if (kind[i] == Kind::free) ++pg.group.free_rank;

  pg.images.reserve(gens);
  for (std::size_t j = 0; j < gens; ++j) {
    GroupElement e = GroupElement::zero(pg.group);
    std::size_t fi = 0, ti = 0;
    for (std::size_t i = 0; i < gens; ++i) {
      switch (kind[i]) {
        case Kind::dropped: break;
        case Kind::free: e.free_coords[fi++] = s.v.at(j, i); break;
        case Kind::torsion: e.torsion_coords[ti++] = s.v.at(j, i); break;
      }
    }
    reduce_torsion(e);
    pg.images.push_back(std::move(e));
  }
  return pg;
}

}  // namespace btl
