#include "apery/sparse_poly.hpp"

#include <stdexcept>

namespace apery {

namespace {
const Integer kZero = 0;

void check_dim(int dim, std::size_t got) {
  if (static_cast<std::size_t>(dim) != got)
    throw std::invalid_argument("exponent vector length mismatch");
}
}  // namespace

SparsePoly SparsePoly::constant(int dim, Integer c) {
  SparsePoly p(dim);
  if (c != 0) p.terms_.emplace(Exponents(static_cast<std::size_t>(dim), 0), std::move(c));
  return p;
}

SparsePoly SparsePoly::monomial(Exponents e, Integer c) {
  SparsePoly p(static_cast<int>(e.size()));
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool SparsePoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return true;
  return false;
}

void SparsePoly::add_term(std::span<const int> e, const Integer& c) {
  check_dim(dim_, e.size());
  if (c == 0) return;
  Exponents key(e.begin(), e.end());
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::add_term(std::initializer_list<int> e, const Integer& c) {
  add_term(std::span<const int>(e.begin(), e.size()), c);
}

const Integer& SparsePoly::coeff(std::span<const int> e) const {
  check_dim(dim_, e.size());
  auto it = terms_.find(Exponents(e.begin(), e.end()));
  return it == terms_.end() ? kZero : it->second;
}

const Integer& SparsePoly::coeff(std::initializer_list<int> e) const {
  return coeff(std::span<const int>(e.begin(), e.size()));
}

const Integer& SparsePoly::constant_term() const {
  auto it = terms_.find(Exponents(static_cast<std::size_t>(dim_), 0));
  return it == terms_.end() ? kZero : it->second;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_dim(dim_, static_cast<std::size_t>(o.dim_));
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_dim(dim_, static_cast<std::size_t>(o.dim_));
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_dim(dim_, static_cast<std::size_t>(o.dim_));
  SparsePoly r(dim_);
  Exponents e(static_cast<std::size_t>(dim_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < dim_; ++i) e[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::mul_truncated(const SparsePoly& o,
                                     std::span<const int> caps) const {
  check_dim(dim_, static_cast<std::size_t>(o.dim_));
  check_dim(dim_, caps.size());
  SparsePoly r(dim_);
  Exponents e(static_cast<std::size_t>(dim_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      bool keep = true;
      for (int i = 0; i < dim_; ++i) {
        e[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
        if (e[static_cast<std::size_t>(i)] > caps[static_cast<std::size_t>(i)]) {
          keep = false;
          break;
        }
      }
      if (keep) r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly r = constant(dim_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

SparsePoly SparsePoly::pow_truncated(unsigned e, std::span<const int> caps) const {
  SparsePoly r = constant(dim_, 1);
  for (unsigned i = 0; i < e; ++i) r = r.mul_truncated(*this, caps);
  return r;
}

}  // namespace apery
