#include "hsw/point_locator.hpp"

#include <utility>

#include "hsw/errors.hpp"

namespace hsw {

CutPredicate rational_cut(const Int& p, const Int& q) {
  const Rat target = make_rat(p, q);
  return CutPredicate(
      [target](const Rat& probe) {
        const int c = cmp(target, probe);
        if (c == 0) return Compare::TargetEqual;
        return c > 0 ? Compare::TargetGreater : Compare::TargetLess;
      },
      Exactness::RationalTarget);
}

CutPredicate dedekind_cut_sqrt(const Int& n) {
  if (n <= 0 || int_sqrt(n) * int_sqrt(n) == n) {
    throw NotIrrational("square root target must be a non-square positive integer");
  }
  return CutPredicate(
      [n](const Rat& probe) {
        if (probe < 0) return Compare::TargetGreater;
        // probe^2 vs n, cross-multiplied to integers.
        const Int lhs = probe.get_num() * probe.get_num();
        const Int rhs = n * probe.get_den() * probe.get_den();
        const int c = cmp(lhs, rhs);
        // Equality would make n a rational square, which it is not.
        return c < 0 ? Compare::TargetGreater : Compare::TargetLess;
      },
      Exactness::IrrationalTarget);
}

std::vector<Rat> cauchy_approximants(const DigitStream& stream,
                                     const Int& integer_part,
                                     std::uint64_t k) {
  const std::uint64_t count = k == 0 ? 1 : k;
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(count));
  Rat approx(integer_part);
  out.push_back(approx);
  Int scale(1);
  for (std::uint64_t j = 1; j < count; ++j) {
    scale *= stream.base();
    approx += make_rat(Int(stream.digit_at(j - 1)), scale);
    out.push_back(approx);
  }
  return out;
}

namespace {

// Wraps an oracle and rejects answers that contradict the order implied by
// earlier ones.
class CutMonitor {
 public:
  explicit CutMonitor(const CutPredicate& cut) : cut_(cut) {}

  Compare probe(const Rat& q) {
    const Compare c = cut_.compare(q);
    switch (c) {
      case Compare::TargetGreater:
        if ((min_above_ && q >= *min_above_) || (equal_at_ && q >= *equal_at_)) {
          throw InconsistentCut("oracle claims target above a known upper probe");
        }
        if (!max_below_ || q > *max_below_) max_below_ = q;
        break;
      case Compare::TargetLess:
        if ((max_below_ && q <= *max_below_) || (equal_at_ && q <= *equal_at_)) {
          throw InconsistentCut("oracle claims target below a known lower probe");
        }
        if (!min_above_ || q < *min_above_) min_above_ = q;
        break;
      case Compare::TargetEqual:
        if (equal_at_ && *equal_at_ != q) {
          throw InconsistentCut("oracle claims two distinct exact points");
        }
        if ((max_below_ && q <= *max_below_) || (min_above_ && q >= *min_above_)) {
          throw InconsistentCut("oracle claims an exact point outside the bracket");
        }
        equal_at_ = q;
        break;
    }
    return c;
  }

 private:
  const CutPredicate& cut_;
  std::optional<Rat> max_below_;
  std::optional<Rat> min_above_;
  std::optional<Rat> equal_at_;
};

}  // namespace

std::vector<Rat> LocatorTrace::iterates() const {
  std::vector<Rat> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.alpha);
  return out;
}

std::size_t LocatorTrace::refinement_steps() const {
  std::size_t n = 0;
  for (const auto& s : steps) {
    if (!s.seeding) ++n;
  }
  return n;
}

LocatorTrace locate(const CutPredicate& cut, std::uint64_t budget,
                    LocateStrategy strategy) {
  if (budget < 1) {
    throw DomainError("locate budget must be at least 1");
  }

  LocatorTrace trace;
  CutMonitor monitor(cut);
  std::optional<Rat> lo, hi;

  auto probe = [&](const Rat& alpha, bool seeding) {
    const Compare c = monitor.probe(alpha);
    if (c == Compare::TargetGreater) {
      lo = alpha;
    } else if (c == Compare::TargetLess) {
      hi = alpha;
    }
    std::optional<Rat> width;
    if (lo && hi) width = Rat(*hi - *lo);
    trace.steps.push_back(LocateStep{alpha, c, seeding, std::move(width)});
    return c;
  };

  // An Equal answer is accepted only when a second call confirms it; a
  // flapping oracle trips the monitor on the repeat.
  auto confirmed_equal = [&](const Rat& alpha) {
    return monitor.probe(alpha) == Compare::TargetEqual;
  };

  // Seed phase: find the consecutive-integer bracket around the target,
  // or hit it exactly on an integer. Probes here do not consume budget.
  Int ilo, ihi;
  {
    const Compare at_zero = probe(Rat(0), true);
    if (at_zero == Compare::TargetEqual && confirmed_equal(Rat(0))) {
      trace.outcome = LocatorTrace::Exact{Rat(0)};
      return trace;
    }
    const bool positive = at_zero == Compare::TargetGreater;
    ilo = 0;
    ihi = 0;
    Int step = positive ? 1 : -1;
    int doublings = 0;
    while (true) {
      if (++doublings > 200) {
        throw DomainError("no integer bracket within the seeding range");
      }
      const Compare c = probe(Rat(step), true);
      if (c == Compare::TargetEqual && confirmed_equal(Rat(step))) {
        trace.outcome = LocatorTrace::Exact{Rat(step)};
        return trace;
      }
      const bool past = positive ? c == Compare::TargetLess
                                 : c == Compare::TargetGreater;
      if (past) {
        if (positive) {
          ihi = step;
          ilo = step / 2;
        } else {
          ilo = step;
          ihi = step / 2;
        }
        break;
      }
      step *= 2;
    }
    while (ihi - ilo > 1) {
      Int mid;
      mpz_fdiv_q_2exp(mid.get_mpz_t(), Int(ilo + ihi).get_mpz_t(), 1);
      const Compare c = probe(Rat(mid), true);
      if (c == Compare::TargetEqual && confirmed_equal(Rat(mid))) {
        trace.outcome = LocatorTrace::Exact{Rat(mid)};
        return trace;
      }
      if (c == Compare::TargetGreater) {
        ilo = mid;
      } else {
        ihi = mid;
      }
    }
    lo = Rat(ilo);
    hi = Rat(ihi);
  }

  // Refinement phase: budget counts these rounds only.
  for (std::uint64_t round = 0; round < budget; ++round) {
    Rat alpha;
    if (strategy == LocateStrategy::Bisection) {
      alpha = Rat((*lo + *hi) / 2);
    } else {
      alpha = make_rat(Int(lo->get_num() + hi->get_num()),
                       Int(lo->get_den() + hi->get_den()));
    }
    const Compare c = probe(alpha, false);
    if (c == Compare::TargetEqual && confirmed_equal(alpha)) {
      trace.outcome = LocatorTrace::Exact{alpha};
      return trace;
    }
  }
  trace.outcome = LocatorTrace::BudgetExhausted{*lo, *hi};
  return trace;
}

}  // namespace hsw
