#include "hsw/hybrid_space.hpp"

#include <json.hpp>
#include <utility>

#include "hsw/errors.hpp"

namespace hsw {

OrderedPair::OrderedPair(std::int64_t i_, std::int64_t j_) : i(i_), j(j_) {
  if (!(i < j)) {
    throw DomainError("ordered pair needs i < j");
  }
}

Convexity Convexity::infinite() {
  Convexity c;
  c.infinite_ = true;
  return c;
}

Convexity Convexity::finite(const Rat& value) {
  if (value <= 1) {
    throw InvalidConvexity("convexity must be greater than 1");
  }
  Convexity c;
  c.value_ = value;
  return c;
}

const Rat& Convexity::value() const {
  if (infinite_) {
    throw InvalidConvexity("infinite convexity has no rational value");
  }
  return value_;
}

Rat Convexity::determinate_factor() const {
  if (infinite_) return Rat(1);
  return Rat(1) - Rat(1) / value_;
}

std::string Convexity::str() const {
  return infinite_ ? "inf" : rat_str(value_);
}

Convexity Convexity::parse(const std::string& text) {
  if (text == "inf") return infinite();
  return finite(parse_rat(text));
}

bool operator==(const Convexity& a, const Convexity& b) {
  if (a.infinite_ != b.infinite_) return false;
  return a.infinite_ || a.value_ == b.value_;
}

HybridInterval::HybridInterval(Rat lower_, Rat upper_, Convexity convexity_)
    : lower(std::move(lower_)),
      upper(std::move(upper_)),
      convexity(std::move(convexity_)) {
  if (!(lower < upper)) {
    throw DomainError("hybrid interval needs lower < upper");
  }
}

std::string to_json_string(const HybridInterval& interval) {
  nlohmann::ordered_json j;
  j["lower"] = rat_str(interval.lower);
  j["upper"] = rat_str(interval.upper);
  j["convexity"] = interval.convexity.str();
  return j.dump();
}

HybridInterval hybrid_interval_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad interval JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("lower") || !j.contains("upper") ||
      !j.contains("convexity")) {
    throw ParseError("interval JSON needs lower/upper/convexity");
  }
  return HybridInterval(parse_rat(j["lower"].get<std::string>()),
                        parse_rat(j["upper"].get<std::string>()),
                        Convexity::parse(j["convexity"].get<std::string>()));
}

HybridMapping::HybridMapping(std::string domain_label,
                             std::string codomain_label,
                             std::vector<Entry> assignments)
    : domain_label_(std::move(domain_label)),
      codomain_label_(std::move(codomain_label)),
      assignments_(std::move(assignments)) {
  for (std::size_t t = 0; t < assignments_.size(); ++t) {
    if (!(assignments_[t].lower < assignments_[t].upper)) {
      throw DomainError("mapping interval needs lower < upper");
    }
    if (t > 0 && !(assignments_[t - 1].upper <= assignments_[t].lower)) {
      throw DomainError("mapping intervals must be ordered and disjoint");
    }
  }
}

const HybridMapping::Entry* HybridMapping::successor(std::size_t index) const {
  if (index + 1 >= assignments_.size()) return nullptr;
  return &assignments_[index + 1];
}

namespace {

void check_pair_order(const OrderedPair& a, const OrderedPair& b) {
  if (b.i < a.j) {
    throw NonAdjacentPairs("pairs overlap or are out of order");
  }
}

}  // namespace

std::int64_t virtual_distance(const OrderedPair& a, const OrderedPair& b) {
  check_pair_order(a, b);
  return b.j - a.i;
}

std::int64_t actual_distance(const OrderedPair& a, const OrderedPair& b) {
  check_pair_order(a, b);
  return (a.j - a.i) + (b.j - b.i);
}

std::int64_t add_intervals(const OrderedPair& a, const OrderedPair& b) {
  check_pair_order(a, b);
  if (b.i == a.j) {
    return b.j - a.i;
  }
  return actual_distance(a, b);
}

Convexity convexity(const OrderedPair& a, const OrderedPair& b) {
  check_pair_order(a, b);
  if (b.i == a.j) {
    return Convexity::infinite();
  }
  return Convexity::finite(make_rat(Int(b.j - a.i), Int(b.i - a.j)));
}

Rat actual_from_virtual(const Rat& virtual_dist, const Convexity& c) {
  if (virtual_dist < 0) {
    throw DomainError("virtual distance must be non-negative");
  }
  return Rat(virtual_dist * c.determinate_factor());
}

Convexity pattern_convexity(const PatternMask& mask) {
  if (mask.free_count() == 0) {
    return Convexity::infinite();
  }
  return Convexity::finite(
      make_rat(Int(static_cast<unsigned long>(mask.period())),
               Int(static_cast<unsigned long>(mask.free_count()))));
}

Rat predictable_fraction(const Convexity& c) {
  return c.determinate_factor();
}

TraversalResult traversal_sum(const Rat& x1,
                              const std::vector<Convexity>& convexities) {
  if (convexities.empty()) {
    throw DomainError("traversal needs at least one convexity");
  }
  const Rat first_factor = convexities.front().determinate_factor();

  // The bracketed sum from the second interval on, as printed: Ci/(Ci-1)
  // is 1 for an infinite convexity.
  Rat sum(0);
  for (std::size_t t = 1; t < convexities.size(); ++t) {
    const Convexity& c = convexities[t];
    if (c.is_infinite()) {
      sum += 1;
    } else {
      sum += Rat(c.value() / Rat(c.value() - 1));
    }
  }
  TraversalResult result;
  result.paper_bracket = Rat(x1 * first_factor * sum);
  result.total_virtual_all = Rat(result.paper_bracket + x1);

  // Constant actual distance across intervals pins every length:
  // x_i (1 - 1/Ci) = x1 (1 - 1/C1).
  const Rat actual_per_interval = Rat(x1 * first_factor);
  for (const Convexity& c : convexities) {
    result.interval_lengths.push_back(
        Rat(actual_per_interval / c.determinate_factor()));
  }
  return result;
}

std::uint64_t peano_add(std::uint64_t a, std::uint64_t b) {
  if (b == 0) {
    return a;  // a + 0 = a
  }
  return peano_add(a, b - 1) + 1;  // a + S(b) = S(a + b)
}

}  // namespace hsw
