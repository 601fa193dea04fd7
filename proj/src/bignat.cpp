#include "crossint/bignat.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace crossint {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigNat::BigNat(u64 v) {
  if (v != 0) {
    d_.push_back(static_cast<u32>(v));
    if (v >> 32) d_.push_back(static_cast<u32>(v >> 32));
  }
}

void BigNat::trim() {
  while (!d_.empty() && d_.back() == 0) d_.pop_back();
}

u64 BigNat::as_u64() const {
  if (d_.size() > 2) throw std::overflow_error("BigNat: value exceeds 64 bits");
  u64 v = 0;
  if (d_.size() > 1) v = static_cast<u64>(d_[1]) << 32;
  if (!d_.empty()) v |= d_[0];
  return v;
}

int BigNat::cmp(const BigNat& a, const BigNat& b) {
  if (a.d_.size() != b.d_.size()) return a.d_.size() < b.d_.size() ? -1 : 1;
  for (std::size_t i = a.d_.size(); i-- > 0;) {
    if (a.d_[i] != b.d_[i]) return a.d_[i] < b.d_[i] ? -1 : 1;
  }
  return 0;
}

BigNat& BigNat::operator+=(const BigNat& o) {
  if (d_.size() < o.d_.size()) d_.resize(o.d_.size(), 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    u64 cur = carry + d_[i];
    if (i < o.d_.size()) cur += o.d_[i];
    d_[i] = static_cast<u32>(cur);
    carry = cur >> 32;
  }
  if (carry) d_.push_back(static_cast<u32>(carry));
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& o) {
  if (cmp(*this, o) < 0) throw std::underflow_error("BigNat: negative result");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(d_[i]) - borrow;
    if (i < o.d_.size()) cur -= o.d_[i];
    borrow = 0;
    if (cur < 0) {
      cur += (std::int64_t{1} << 32);
      borrow = 1;
    }
    d_[i] = static_cast<u32>(cur);
  }
  trim();
  return *this;
}

BigNat BigNat::operator*(const BigNat& o) const {
  BigNat r;
  if (is_zero() || o.is_zero()) return r;
  r.d_.assign(d_.size() + o.d_.size(), 0);
  for (std::size_t i = 0; i < d_.size(); ++i) {
    u64 carry = 0;
    for (std::size_t j = 0; j < o.d_.size(); ++j) {
      u64 cur = static_cast<u64>(d_[i]) * o.d_[j] + r.d_[i + j] + carry;
      r.d_[i + j] = static_cast<u32>(cur);
      carry = cur >> 32;
    }
    std::size_t pos = i + o.d_.size();
    while (carry) {
      u64 cur = r.d_[pos] + carry;
      r.d_[pos] = static_cast<u32>(cur);
      carry = cur >> 32;
      ++pos;
    }
  }
  r.trim();
  return r;
}

BigNat& BigNat::mul_u64(u64 m) {
  if (m == 0 || is_zero()) {
    d_.clear();
    return *this;
  }
  u128 carry = 0;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    u128 cur = static_cast<u128>(d_[i]) * m + carry;
    d_[i] = static_cast<u32>(cur);
    carry = cur >> 32;
  }
  while (carry) {
    d_.push_back(static_cast<u32>(carry));
    carry >>= 32;
  }
  return *this;
}

u64 BigNat::divmod_u64(u64 divisor) {
  if (divisor == 0) throw std::domain_error("BigNat: division by zero");
  u128 rem = 0;
  for (std::size_t i = d_.size(); i-- > 0;) {
    u128 cur = (rem << 32) | d_[i];
    d_[i] = static_cast<u32>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<u64>(rem);
}

std::string BigNat::str() const {
  if (is_zero()) return "0";
  BigNat tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    u64 chunk = tmp.divmod_u64(1000000000u);
    std::string part = std::to_string(chunk);
    if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
    out.insert(0, part);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigNat& v) {
  return os << v.str();
}

}  // namespace crossint
