#include "crossint/params.hpp"

#include <array>
#include <sstream>

#include "crossint/errors.hpp"

namespace crossint {

namespace {

struct NameEntry {
  std::string_view name;
  TheoremId id;
};

constexpr std::array<NameEntry, 8> kNames{{
    {"hm_pair", TheoremId::hm_pair},
    {"ft_pair", TheoremId::ft_pair},
    {"frankl_i", TheoremId::frankl_i},
    {"frankl_ii", TheoremId::frankl_ii},
    {"conjecture", TheoremId::conjecture},
    {"main2", TheoremId::main2},
    {"main6", TheoremId::main6},
    {"h", TheoremId::h},
}};

class Checker {
 public:
  explicit Checker(const ParamSet& p) : p_(p) {}

  long long need(const std::optional<long long>& field, const char* name) {
    if (!field) {
      errs_.push_back(std::string("missing parameter ") + name);
      return 0;
    }
    return *field;
  }

  void require(bool ok, const std::string& msg) {
    if (!ok) errs_.push_back(msg);
  }

  std::vector<std::string> take() { return std::move(errs_); }

  const ParamSet& p_;
  std::vector<std::string> errs_;
};

std::string show(const char* expr, long long v) {
  std::ostringstream os;
  os << expr << "=" << v;
  return os.str();
}

}  // namespace

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

std::string_view theorem_name(TheoremId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "?";
}

std::vector<std::string> check_theorem_params(TheoremId id, const ParamSet& p) {
  Checker c(p);
  switch (id) {
    case TheoremId::hm_pair: {
      long long n = c.need(p.n, "n"), k = c.need(p.k, "k");
      c.require(k >= 1, "k >= 1 violated (" + show("k", k) + ")");
      c.require(n >= 2 * k,
                "n >= 2k violated (" + show("n", n) + ", " + show("2k", 2 * k) + ")");
      break;
    }
    case TheoremId::ft_pair: {
      long long n = c.need(p.n, "n"), k = c.need(p.k, "k"), l = c.need(p.l, "l");
      c.require(l >= 2, "l >= 2 violated (" + show("l", l) + ")");
      c.require(k >= l,
                "k >= l violated (" + show("k", k) + ", " + show("l", l) + ")");
      c.require(n >= k + l, "n >= k+l violated (" + show("n", n) + ", " +
                                show("k+l", k + l) + ")");
      break;
    }
    case TheoremId::frankl_i:
    case TheoremId::frankl_ii: {
      long long n = c.need(p.n, "n"), k = c.need(p.k, "k"), t = c.need(p.t, "t");
      c.require(t >= 0, "t >= 0 violated (" + show("t", t) + ")");
      c.require(k >= 1, "k >= 1 violated (" + show("k", k) + ")");
      c.require(n >= 2 * k + t, "n >= 2k+t violated (" + show("n", n) + ", " +
                                    show("2k+t", 2 * k + t) + ")");
      break;
    }
    case TheoremId::conjecture: {
      long long n = c.need(p.n, "n"), k = c.need(p.k, "k"), t = c.need(p.t, "t"),
                s = c.need(p.s, "s");
      c.require(t >= 0, "t >= 0 violated (" + show("t", t) + ")");
      c.require(s >= 0, "s >= 0 violated (" + show("s", s) + ")");
      c.require(k >= s + 1, "k >= s+1 violated (" + show("k", k) + ", " +
                                show("s+1", s + 1) + ")");
      c.require(n >= 2 * k + t, "n >= 2k+t violated (" + show("n", n) + ", " +
                                    show("2k+t", 2 * k + t) + ")");
      break;
    }
    case TheoremId::main2: {
      long long n = c.need(p.n, "n"), k = c.need(p.k, "k"), t = c.need(p.t, "t"),
                s = c.need(p.s, "s"), m = c.need(p.m, "m");
      c.require(t >= 0, "t >= 0 violated (" + show("t", t) + ")");
      c.require(s >= 0, "s >= 0 violated (" + show("s", s) + ")");
      c.require(k >= s + 1, "k >= s+1 violated (" + show("k", k) + ", " +
                                show("s+1", s + 1) + ")");
      c.require(n >= 2 * k + t, "n >= 2k+t violated (" + show("n", n) + ", " +
                                    show("2k+t", 2 * k + t) + ")");
      c.require(m > k + t + s, "m > k+t+s violated (" + show("m", m) + ", " +
                                   show("k+t+s", k + t + s) + ")");
      break;
    }
    case TheoremId::main6: {
      long long n = c.need(p.n, "n"), k = c.need(p.k, "k"), l = c.need(p.l, "l"),
                s = c.need(p.s, "s");
      c.require(s >= 0, "s >= 0 violated (" + show("s", s) + ")");
      c.require(l >= s + 1, "l >= s+1 violated (" + show("l", l) + ", " +
                                show("s+1", s + 1) + ")");
      c.require(k >= l,
                "k >= l violated (" + show("k", k) + ", " + show("l", l) + ")");
      c.require(n >= k + l, "n >= k+l violated (" + show("n", n) + ", " +
                                show("k+l", k + l) + ")");
      break;
    }
    case TheoremId::h: {
      long long n = c.need(p.n, "n"), k = c.need(p.k, "k"), m = c.need(p.m, "m");
      c.require(k >= 1, "k >= 1 violated (" + show("k", k) + ")");
      c.require(m >= k,
                "m >= k violated (" + show("m", m) + ", " + show("k", k) + ")");
      c.require(2 * k > m, "2k > m violated (" + show("2k", 2 * k) + ", " +
                               show("m", m) + ")");
      c.require(n >= 2 * k, "n >= 2k violated (" + show("n", n) + ", " +
                                show("2k", 2 * k) + ")");
      break;
    }
  }
  return c.take();
}

void require_theorem_params(TheoremId id, const ParamSet& p) {
  auto errs = check_theorem_params(id, p);
  if (errs.empty()) return;
  std::ostringstream os;
  os << theorem_name(id) << ": ";
  for (std::size_t i = 0; i < errs.size(); ++i) {
    if (i) os << "; ";
    os << errs[i];
  }
  throw PreconditionError(os.str());
}

}  // namespace crossint
