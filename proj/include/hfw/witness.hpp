#pragma once

// Upper-bound witnesses for graph colorings with 3, 4 or 5 colors: small
// base colorings read from a witness store, grown by repeatedly substituting
// them into plane gadgets.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hfw/coloring.hpp"
#include "hfw/constructions.hpp"

#ifndef HFW_DEFAULT_WITNESS_DIR
#define HFW_DEFAULT_WITNESS_DIR "data/witnesses"
#endif

namespace hfw {

/// Upper bound on the graph score with t in {3,4,5} colors that witness_upper
/// is required to meet.
inline std::uint64_t recursive_upper_bound(std::uint32_t t, std::uint64_t n) {
  require(n >= 1, ErrorKind::invalid_argument, "order must be positive");
  switch (t) {
    case 3:
      return n % 3 == 1 ? n + 2 : n + 3;
    case 4:
      switch (n % 8) {
        case 1:
          return n + 3;
        case 0:
          return n + 4;
        case 2:
        case 6:
        case 7:
          return n + 5;
        default:
          return n + 6;
      }
    case 5:
      if (n < 37) return n + 10;
      switch (n % 5) {
        case 1:
          return n + 4;
        case 2:
        case 3:
          return n + 7;
        case 4:
          return n + 6;
        default:
          return n + 5;
      }
    default:
      fail(ErrorKind::invalid_argument, "recursive witnesses exist only for 3, 4 or 5 colors");
  }
}

struct WitnessEntry {
  std::uint32_t t = 0;
  std::uint32_t n = 0;
  std::uint64_t total = 0;
  std::string file;
  std::string source;
  bool proved = false;  // total is the exact minimum
};

struct ExactValue {
  std::uint32_t r = 0, t = 0, n = 0;
  std::uint64_t value = 0;
};

/// Read-only view of a witness directory: manifest.json plus one coloring
/// file per base, named t{t}_n{n}.json.
class WitnessStore {
 public:
  WitnessStore() = default;

  explicit WitnessStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    const auto manifest = dir_ / "manifest.json";
    std::ifstream in(manifest);
    if (!in.good()) return;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
      for (const auto& w : j.value("witnesses", nlohmann::json::array())) {
        WitnessEntry e;
        e.t = w.at("t").get<std::uint32_t>();
        e.n = w.at("n").get<std::uint32_t>();
        e.total = w.at("total").get<std::uint64_t>();
        e.file = w.at("file").get<std::string>();
        e.source = w.value("source", std::string{});
        e.proved = w.value("proved", false);
        entries_[{e.t, e.n}] = e;
      }
      for (const auto& v : j.value("exact_values", nlohmann::json::array())) {
        exact_.push_back({v.at("r").get<std::uint32_t>(), v.at("t").get<std::uint32_t>(),
                          v.at("n").get<std::uint32_t>(), v.at("value").get<std::uint64_t>()});
      }
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::parse_error, "witness manifest " + manifest.string() + ": " + e.what());
    }
  }

  /// HFW_WITNESS_DIR if set, else the directory configured at build time.
  static const WitnessStore& default_store() {
    static const WitnessStore store([] {
      const char* env = std::getenv("HFW_WITNESS_DIR");
      return std::filesystem::path(env != nullptr && *env != '\0' ? env : HFW_DEFAULT_WITNESS_DIR);
    }());
    return store;
  }

  const std::filesystem::path& directory() const { return dir_; }
  bool empty() const { return entries_.empty(); }

  std::vector<WitnessEntry> entries() const {
    std::vector<WitnessEntry> out;
    for (const auto& [key, e] : entries_) out.push_back(e);
    return out;
  }

  const std::vector<ExactValue>& exact_values() const { return exact_; }

  std::optional<WitnessEntry> entry(std::uint32_t t, std::uint32_t n) const {
    auto it = entries_.find({t, n});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// Loads and re-scores the stored coloring; a score differing from the
  /// manifest is reported as a parse error.
  std::optional<EdgeColoring> load(std::uint32_t t, std::uint32_t n) const {
    const auto e = entry(t, n);
    if (!e) return std::nullopt;
    const auto path = dir_ / e->file;
    std::ifstream in(path);
    require(in.good(), ErrorKind::witness_unavailable, "witness file missing: " + path.string());
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
      fail(ErrorKind::parse_error, "witness file " + path.string() + ": " + ex.what());
    }
    EdgeColoring c = coloring_from_json(j);
    require(c.rank() == 2 && c.colors() == t && c.order() == n, ErrorKind::parse_error,
            "witness file " + path.string() + " has the wrong shape");
    require(score(c).total == e->total, ErrorKind::parse_error,
            "witness file " + path.string() + " does not score its recorded total");
    return c;
  }

 private:
  std::filesystem::path dir_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, WitnessEntry> entries_;
  std::vector<ExactValue> exact_;
};

namespace detail {

inline EdgeColoring require_base(const WitnessStore& store, std::uint32_t t, std::uint32_t n) {
  auto c = store.load(t, n);
  if (!c) {
    fail(ErrorKind::witness_unavailable,
         "no stored base coloring for t=" + std::to_string(t) + ", n=" + std::to_string(n) + " in " +
             store.directory().string());
  }
  return std::move(*c);
}

inline EdgeColoring grow(EdgeColoring inner, const PlaneGadget& gadget, std::uint64_t times) {
  for (std::uint64_t i = 0; i < times; ++i) inner = substitute(gadget.coloring, gadget.apex, inner);
  return inner;
}

inline EdgeColoring first_vertices(const EdgeColoring& c, std::uint32_t n) {
  return n == c.order() ? c : restrict_coloring(c, VertexSet::prefix(n));
}

}  // namespace detail

/// A t-coloring of K_n scoring at most recursive_upper_bound(t, n).
///
/// With a gadget of order m from a plane of order q, substituting a base of
/// order b at the gadget's apex gives order b + m - 1 and adds m - 1 to the
/// score. Bases come from the store; the result is re-scored before return.
inline EdgeColoring witness_upper(std::uint32_t t, std::uint32_t n,
                                  const WitnessStore& store = WitnessStore::default_store()) {
  require(t >= 3 && t <= 5, ErrorKind::invalid_argument, "witness_upper supports t in {3,4,5}");
  require(n >= 1, ErrorKind::invalid_argument, "order must be positive");
  require(n <= kMaxVertices, ErrorKind::size_limit, "order too large");
  EdgeColoring result(1, 2, t);
  if (t == 5 && n >= 37) {
    // Steps of 15 (plane of order 4) and 25 (plane of order 5).
    const std::uint32_t lifted = n % 5 == 2 ? n : n + (6 - n % 5) % 5;
    require(lifted <= kMaxVertices, ErrorKind::size_limit, "order too large for the 5-color recursion");
    std::uint32_t base = lifted % 5 == 1 ? 1 : (lifted == 37 ? 12 : 2);
    std::uint32_t k = (lifted - base) / 5;
    std::uint32_t small = 0, large = 0;
    while (k % 3 != 0) {
      k -= 5;
      ++large;
    }
    small = k / 3;
    result = detail::require_base(store, 5, base);
    result = detail::grow(std::move(result), affine_plane_coloring(4), small);
    result = detail::grow(std::move(result), plane_apex_coloring(5), large);
    result = detail::first_vertices(result, n);
  } else {
    const std::uint32_t q = t - 1;
    const std::uint32_t step = q * q - 1;
    const std::uint32_t base = (n - 1) % step + 1;
    result = detail::grow(detail::require_base(store, t, base), affine_plane_coloring(q), (n - base) / step);
  }
  const std::uint64_t total = score(result).total;
  require(result.order() == n && total <= recursive_upper_bound(t, n), ErrorKind::construction_invariant_violated,
          "recursive witness for t=" + std::to_string(t) + ", n=" + std::to_string(n) + " scores " +
              std::to_string(total));
  return result;
}

}  // namespace hfw
