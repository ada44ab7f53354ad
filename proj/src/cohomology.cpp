#include "toric/cohomology.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

namespace {

Integer reduce(const Integer& a, const Integer& modulus) {
  Integer r = a % modulus;
  if (r < 0) r += modulus;
  return r;
}

std::string simplex_text(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void require_same_group(const CohClass& a, const CohClass& b) {
  if (a.presentation != b.presentation && !(*a.presentation == *b.presentation))
    throw GroupMismatch("classes belong to different cohomology groups");
}

template <class Vector>
Vector tail(const Vector& v, std::size_t from) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(from), v.end());
}

}  // namespace

std::string Coefficients::tag() const {
  const std::string z = integer_rank == 1 ? "Z" : "Z^" + std::to_string(integer_rank);
  switch (kind) {
    case CoefficientKind::Integers:
      return z;
    case CoefficientKind::Reals:
      return "R";
    case CoefficientKind::IntegersPlusReals:
      return z + "+R";
  }
  return z;
}

Integer CohGroupPresentation::order() const {
  Integer out = 1;
  for (const auto& t : torsion) out *= t;
  return out;
}

CohClass make_class(std::shared_ptr<const CohGroupPresentation> p, LatticeVector free,
                    LatticeVector torsion, RationalVector real) {
  if (free.size() != p->free_rank || torsion.size() != p->torsion.size() ||
      real.size() != p->real_dim) {
    throw DimensionMismatch("class coordinates do not match the presentation");
  }
  for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = reduce(torsion[i], p->torsion[i]);
  return CohClass{std::move(p), std::move(free), std::move(torsion), std::move(real)};
}

CohClass class_zero(std::shared_ptr<const CohGroupPresentation> p) {
  const std::size_t f = p->free_rank, t = p->torsion.size(), r = p->real_dim;
  return CohClass{std::move(p), LatticeVector(f, Integer(0)), LatticeVector(t, Integer(0)),
                  RationalVector(r, Rational(0))};
}

CohClass class_add(const CohClass& a, const CohClass& b) {
  require_same_group(a, b);
  CohClass out = a;
  for (std::size_t i = 0; i < out.free.size(); ++i) out.free[i] += b.free[i];
  for (std::size_t i = 0; i < out.torsion.size(); ++i)
    out.torsion[i] = reduce(out.torsion[i] + b.torsion[i], a.presentation->torsion[i]);
  for (std::size_t i = 0; i < out.real.size(); ++i) out.real[i] += b.real[i];
  return out;
}

CohClass class_neg(const CohClass& a) {
  CohClass out = a;
  for (auto& x : out.free) x = -x;
  for (std::size_t i = 0; i < out.torsion.size(); ++i)
    out.torsion[i] = reduce(-out.torsion[i], a.presentation->torsion[i]);
  for (auto& x : out.real) x = -x;
  return out;
}

CohClass class_sub(const CohClass& a, const CohClass& b) { return class_add(a, class_neg(b)); }

bool is_zero(const CohClass& a) {
  const auto zero = [](const auto& x) { return x == 0; };
  return std::all_of(a.free.begin(), a.free.end(), zero) &&
         std::all_of(a.torsion.begin(), a.torsion.end(), zero) &&
         std::all_of(a.real.begin(), a.real.end(), zero);
}

std::string to_string(const CohClass& a) {
  std::string out = "(free=" + to_string(a.free) + ", torsion=" + to_string(a.torsion) + ", real=(";
  for (std::size_t i = 0; i < a.real.size(); ++i) out += (i ? "," : "") + a.real[i].str();
  return out + "))";
}

IntegerMatrix coboundary_matrix(const SimplicialComplex& k, std::size_t d) {
  const auto& lower = k.simplices(d);
  const auto& upper = k.simplices(d + 1);
  IntegerMatrix m(upper.size(), lower.size());
  for (std::size_t row = 0; row < upper.size(); ++row) {
    for (std::size_t omit = 0; omit < upper[row].size(); ++omit) {
      Simplex face = upper[row];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(omit));
      m(row, *k.index_of(face)) = omit % 2 ? -1 : 1;
    }
  }
  return m;
}

CohomologyGroup::CohomologyGroup(const SimplicialComplex& k, Coefficients coefficients,
                                 std::size_t degree)
    : coefficients_(coefficients),
      degree_(degree),
      simplices_(k.simplices(degree)),
      next_simplices_(k.simplices(degree + 1)) {
  const std::size_t m = simplices_.size();
  previous_ = degree == 0 ? IntegerMatrix(m, 0) : coboundary_matrix(k, degree - 1);
  next_ = coboundary_matrix(k, degree);

  const SmithDecomposition d = smith_normal_form(previous_);
  image_rank_ = d.rank();
  divisors_.assign(d.diagonal.begin(), d.diagonal.begin() + static_cast<std::ptrdiff_t>(image_rank_));
  left_ = d.left;
  left_inverse_ = unimodular_inverse(left_);
  for (std::size_t i = 0; i < image_rank_; ++i)
    if (divisors_[i] > 1) torsion_rows_.push_back(i);

  const IntegerMatrix b = next_ * left_inverse_.column_block(image_rank_, m);
  const SmithDecomposition bd = smith_normal_form(b);
  tail_rank_ = bd.rank();
  kernel_basis_ = bd.right;
  kernel_basis_inverse_ = unimodular_inverse(kernel_basis_);
  const std::size_t free = m - image_rank_ - tail_rank_;

  // Independent count over Q.
  const std::size_t real_dim = m - rational_rank(previous_) - rational_rank(next_);
  if (real_dim != free) throw std::logic_error("cohomology: rank bookkeeping disagrees over Q");

  auto p = std::make_shared<CohGroupPresentation>();
  p->coefficients = coefficients;
  p->degree = degree;
  const std::size_t n = coefficients.integer_rank;
  if (n > 0) {
    p->free_rank = n * free;
    for (auto i : torsion_rows_)
      for (std::size_t c = 0; c < n; ++c) p->torsion.push_back(divisors_[i]);
  }
  if (coefficients.has_reals()) p->real_dim = real_dim;
  presentation_ = std::move(p);
}

std::vector<CohClass> CohomologyGroup::generators() const {
  const auto& p = *presentation_;
  std::vector<CohClass> out;
  for (std::size_t i = 0; i < p.free_rank; ++i) {
    CohClass c = zero();
    c.free[i] = 1;
    out.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < p.torsion.size(); ++i) {
    CohClass c = zero();
    c.torsion[i] = 1;
    out.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < p.real_dim; ++i) {
    CohClass c = zero();
    c.real[i] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

void CohomologyGroup::check_shape(const Cochain& c, std::size_t length) const {
  const std::size_t n = coefficients_.integer_rank;
  bool ok = c.integral.size() == n;
  for (const auto& v : c.integral) ok = ok && v.size() == length;
  ok = ok && c.real.size() == (coefficients_.has_reals() ? length : 0);
  if (!ok) throw DimensionMismatch("cochain shape does not match the coefficients and degree");
}

void CohomologyGroup::check_cocycle(const std::vector<LatticeVector>& integral,
                                    const RationalVector& real) const {
  std::size_t first = next_simplices_.size();
  for (const auto& v : integral) {
    const LatticeVector dz = next_ * v;
    for (std::size_t i = 0; i < dz.size(); ++i)
      if (dz[i] != 0) first = std::min(first, i);
  }
  if (!real.empty()) {
    const RationalVector dz = next_ * real;
    for (std::size_t i = 0; i < dz.size(); ++i)
      if (dz[i] != 0) first = std::min(first, i);
  }
  if (first < next_simplices_.size())
    throw NotACocycle("not a cocycle: coboundary is nonzero on the " +
                      std::to_string(degree_ + 1) + "-simplex " +
                      simplex_text(next_simplices_[first]));
}

CohClass CohomologyGroup::cocycle_to_class(const Cochain& z) const {
  check_shape(z, simplices_.size());
  check_cocycle(z.integral, z.real);

  const std::size_t n = coefficients_.integer_rank;
  const std::size_t free = presentation_->free_rank / std::max<std::size_t>(n, 1);
  LatticeVector free_coords(presentation_->free_rank, Integer(0));
  LatticeVector torsion_coords(presentation_->torsion.size(), Integer(0));
  for (std::size_t c = 0; c < n; ++c) {
    const LatticeVector y = left_ * z.integral[c];
    for (std::size_t t = 0; t < torsion_rows_.size(); ++t) torsion_coords[t * n + c] = y[torsion_rows_[t]];
    const LatticeVector u = kernel_basis_inverse_ * tail(y, image_rank_);
    for (std::size_t j = 0; j < free; ++j) free_coords[j * n + c] = u[tail_rank_ + j];
  }
  RationalVector real_coords;
  if (coefficients_.has_reals()) {
    const RationalVector y = left_ * z.real;
    real_coords = tail(kernel_basis_inverse_ * tail(y, image_rank_), tail_rank_);
  }
  return make_class(presentation_, std::move(free_coords), std::move(torsion_coords),
                    std::move(real_coords));
}

Cochain CohomologyGroup::representative(const CohClass& c) const {
  require_same_group(c, zero());
  const std::size_t m = simplices_.size();
  const std::size_t n = coefficients_.integer_rank;
  const std::size_t free = presentation_->free_rank / std::max<std::size_t>(n, 1);
  const std::size_t tail_length = m - image_rank_;

  Cochain out;
  for (std::size_t comp = 0; comp < n; ++comp) {
    LatticeVector y(m, Integer(0));
    for (std::size_t t = 0; t < torsion_rows_.size(); ++t) y[torsion_rows_[t]] = c.torsion[t * n + comp];
    LatticeVector u(tail_length, Integer(0));
    for (std::size_t j = 0; j < free; ++j) u[tail_rank_ + j] = c.free[j * n + comp];
    const LatticeVector yt = kernel_basis_ * u;
    std::copy(yt.begin(), yt.end(), y.begin() + static_cast<std::ptrdiff_t>(image_rank_));
    out.integral.push_back(left_inverse_ * y);
  }
  if (coefficients_.has_reals()) {
    RationalVector y(m, Rational(0));
    RationalVector u(tail_length, Rational(0));
    std::copy(c.real.begin(), c.real.end(), u.begin() + static_cast<std::ptrdiff_t>(tail_rank_));
    const RationalVector yt = kernel_basis_ * u;
    std::copy(yt.begin(), yt.end(), y.begin() + static_cast<std::ptrdiff_t>(image_rank_));
    out.real = left_inverse_ * y;
  }
  return out;
}

Cochain CohomologyGroup::coboundary_of(const Cochain& c) const {
  check_shape(c, previous_.cols());
  Cochain out;
  for (const auto& v : c.integral) out.integral.push_back(previous_ * v);
  if (!c.real.empty()) out.real = previous_ * c.real;
  return out;
}

CohGroupPresentation cohomology(const SimplicialComplex& k, Coefficients coefficients,
                                std::size_t degree) {
  return CohomologyGroup(k, coefficients, degree).presentation();
}

CohClass cocycle_to_class(const SimplicialComplex& k, Coefficients coefficients,
                          std::size_t degree, const Cochain& z) {
  return CohomologyGroup(k, coefficients, degree).cocycle_to_class(z);
}

}  // namespace toric
