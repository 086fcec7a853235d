#include "thinbase/magic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "thinbase/constructions.hpp"
#include "thinbase/errors.hpp"

namespace thinbase::magic {

namespace {

std::string pair_text(std::int64_t u, std::int64_t v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

Check edges_check(const MagicLabelling& l) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (auto [u, v] : l.edges) {
    if (u < 0 || v < 0 || u >= l.n || v >= l.n) {
      return {"edges", false, "edge " + pair_text(u, v) + " out of range"};
    }
    if (u == v) return {"edges", false, "loop at vertex " + std::to_string(u)};
    if (!seen.insert(std::minmax(u, v)).second) {
      return {"edges", false, "repeated edge " + pair_text(u, v)};
    }
  }
  return {"edges", true, ""};
}

std::vector<std::int64_t> all_labels(const MagicLabelling& l) {
  std::vector<std::int64_t> out(l.vertex_labels);
  out.insert(out.end(), l.edge_labels.begin(), l.edge_labels.end());
  return out;
}

}  // namespace

std::string_view mode_name(Mode m) noexcept {
  return m == Mode::Bijective ? "bijective" : "injection";
}

Mode parse_mode(std::string_view name) {
  if (name == "bijective") return Mode::Bijective;
  if (name == "injection") return Mode::Injection;
  throw std::invalid_argument("unknown labelling mode '" + std::string(name) + "'");
}

std::vector<Check> verify(const MagicLabelling& l) {
  std::vector<Check> out;
  const bool shape_ok = l.n >= 0 && l.vertex_labels.size() == static_cast<std::size_t>(l.n) &&
                        l.edge_labels.size() == l.edges.size();
  out.push_back({"shape", shape_ok,
                 shape_ok ? ""
                          : "n=" + std::to_string(l.n) + ", " +
                                std::to_string(l.vertex_labels.size()) + " vertex labels, " +
                                std::to_string(l.edges.size()) + " edges, " +
                                std::to_string(l.edge_labels.size()) + " edge labels"});
  if (!shape_ok) return out;

  out.push_back(edges_check(l));

  const auto labels = all_labels(l);
  {
    auto bad = std::find_if(labels.begin(), labels.end(), [](auto x) { return x <= 0; });
    out.push_back({"positive", bad == labels.end(),
                   bad == labels.end() ? "" : "label " + std::to_string(*bad)});
  }
  {
    std::set<std::int64_t> seen;
    std::string dup;
    for (auto x : labels) {
      if (!seen.insert(x).second) {
        dup = "duplicated label " + std::to_string(x);
        break;
      }
    }
    out.push_back({"distinct", dup.empty(), dup});
  }
  {
    const std::set<std::int64_t> vertex(l.vertex_labels.begin(), l.vertex_labels.end());
    std::string shared;
    for (auto x : l.edge_labels) {
      if (vertex.count(x)) {
        shared = "label " + std::to_string(x) + " on a vertex and an edge";
        break;
      }
    }
    out.push_back({"vertex-edge-disjoint", shared.empty(), shared});
  }
  if (l.mode == Mode::Bijective) {
    const auto total = static_cast<std::int64_t>(labels.size());
    std::vector<bool> hit(static_cast<std::size_t>(total) + 1, false);
    std::string why;
    for (auto x : labels) {
      if (x >= 1 && x <= total) hit[static_cast<std::size_t>(x)] = true;
    }
    for (std::int64_t x = 1; x <= total && why.empty(); ++x) {
      if (!hit[static_cast<std::size_t>(x)]) why = std::to_string(x) + " missing";
    }
    out.push_back({"bijective", why.empty(), why});
  }
  {
    std::string why;
    if (out[1].pass) {
      for (std::size_t e = 0; e < l.edges.size(); ++e) {
        const auto [u, v] = l.edges[e];
        const std::int64_t sum = l.vertex_labels[static_cast<std::size_t>(u)] +
                                 l.vertex_labels[static_cast<std::size_t>(v)] + l.edge_labels[e];
        if (sum != l.magic_sum) {
          why = "edge " + pair_text(u, v) + " sums to " + std::to_string(sum);
          break;
        }
      }
    } else {
      why = "edge list invalid";
    }
    out.push_back({"magic-sum", why.empty(), why});
  }
  return out;
}

std::vector<Check> basis_violations(const IntSet& a, std::int64_t k, std::int64_t m) {
  std::vector<Check> out;
  if (a.empty()) {
    out.push_back({"nonempty", false, "empty basis"});
    return out;
  }
  if (a.min() != 1) out.push_back({"min-is-one", false, "min " + std::to_string(a.min())});
  if (a.max() > m) {
    out.push_back({"max-within-m", false,
                   "max " + std::to_string(a.max()) + " > m=" + std::to_string(m)});
  }
  if (m < 1) {
    out.push_back({"m-positive", false, "m=" + std::to_string(m)});
    return out;
  }
  // Each non-vertex label c in [m] needs s - c in A (+) A, s = k + m. An
  // interval [k, k+m-1] inside A (+) A is the usual sufficient condition.
  const IntSet sums = restricted_sumset(a);
  for (std::int64_t c = m; c >= 1; --c) {
    if (a.contains(c) || sums.contains(k + m - c)) continue;
    out.push_back({"restricted-sumset-covers", false,
                   "sum " + std::to_string(k + m - c) + " needed for label " + std::to_string(c)});
    break;
  }
  return out;
}

MagicLabelling build_from_basis(const IntSet& a, std::int64_t k, std::int64_t m) {
  const auto bad = basis_violations(a, k, m);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "build_from_basis:";
    for (const auto& c : bad) os << ' ' << c.property << " (" << c.witness << ')';
    throw std::invalid_argument(os.str());
  }
  MagicLabelling out;
  out.mode = Mode::Bijective;
  out.n = static_cast<std::int64_t>(a.size());
  out.magic_sum = k + m;
  out.vertex_labels.assign(a.begin(), a.end());

  // First representation of each restricted sum, smallest i then smallest j.
  std::unordered_map<std::int64_t, std::pair<std::int64_t, std::int64_t>> first;
  first.reserve(a.size() * a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      first.try_emplace(a[i] + a[j], static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
    }
  }
  for (std::int64_t c = 1; c <= m; ++c) {
    if (a.contains(c)) continue;
    // basis_violations guarantees a representation of s - c.
    const auto& rep = first.at(out.magic_sum - c);
    out.edges.push_back(rep);
    out.edge_labels.push_back(c);
  }
  return out;
}

MagicLabelling mrose_magic(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("mrose_magic: t must be positive");
  const IntSet b = set_union(mrose(t).shifted(1), IntSet{8 * t * t + 4 * t - 3});
  return build_from_basis(b, 3, 14 * t * t + 10 * t - 1);
}

MagicLabelling pad_isolated(const MagicLabelling& l) {
  if (l.mode != Mode::Bijective) throw std::invalid_argument("pad_isolated: labelling not bijective");
  if (const Check* bad = first_failure(verify(l))) {
    throw std::invalid_argument("pad_isolated: invalid labelling (" + bad->property + ": " +
                                bad->witness + ")");
  }
  MagicLabelling out = l;
  out.vertex_labels.push_back(l.n + static_cast<std::int64_t>(l.edges.size()) + 1);
  out.n = l.n + 1;
  return out;
}

InjectionResult injection_kn(std::int64_t n, double delta) {
  if (n < 4) throw std::invalid_argument("injection_kn: n must be at least 4");
  if (!(delta > 0)) throw std::invalid_argument("injection_kn: delta must be positive");

  InjectionResult res;
  res.sidon_size =
      static_cast<std::int64_t>(std::ceil((12.0 / 11.0 + delta) * static_cast<double>(n) - 1e-9));
  res.sidon = sidon_of_size(static_cast<std::size_t>(res.sidon_size));
  const auto m = static_cast<double>(res.sidon_size);
  res.window_lo = 2 * res.sidon.max();
  // Floored so every candidate s also satisfies s <= (2+delta) m^2.
  res.window_hi = static_cast<std::int64_t>(std::floor((2.0 + delta) * m * m + 1e-9));
  if (res.window_lo > res.window_hi) {
    throw InfeasibleError("injection_kn: empty magic-sum window [" +
                          std::to_string(res.window_lo) + ", " + std::to_string(res.window_hi) +
                          "]; increase delta");
  }

  const RepCounts triples = rep_counts(res.sidon, res.window_lo, res.window_hi, 3);
  std::size_t best = 0;
  for (std::size_t i = 1; i < triples.counts.size(); ++i) {
    if (triples.counts[i] < triples.counts[best]) best = i;
  }
  const std::int64_t s = res.window_lo + static_cast<std::int64_t>(best);
  res.multiplicity = triples.counts[best];

  // Representations a <= b <= c of s in lexicographic order; drop c unless
  // an earlier removal already broke this one.
  std::vector<std::int64_t> elems(res.sidon.begin(), res.sidon.end());
  std::set<std::int64_t> alive(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      const std::int64_t c = s - elems[i] - elems[j];
      if (c < elems[j]) break;
      if (!res.sidon.contains(c)) continue;
      if (alive.count(elems[i]) && alive.count(elems[j]) && alive.count(c)) {
        alive.erase(c);
        ++res.removed;
      }
    }
  }
  if (static_cast<std::int64_t>(alive.size()) < n) {
    throw InfeasibleError("injection_kn: only " + std::to_string(alive.size()) +
                          " labels survive for n=" + std::to_string(n) + "; increase delta");
  }

  MagicLabelling& l = res.labelling;
  l.mode = Mode::Injection;
  l.n = n;
  l.magic_sum = s;
  auto it = alive.begin();
  for (std::int64_t v = 0; v < n; ++v, ++it) l.vertex_labels.push_back(*it);
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t v = u + 1; v < n; ++v) {
      l.edges.emplace_back(u, v);
      l.edge_labels.push_back(s - l.vertex_labels[static_cast<std::size_t>(u)] -
                              l.vertex_labels[static_cast<std::size_t>(v)]);
    }
  }
  return res;
}

}  // namespace thinbase::magic
