#include "pnbd/search.hpp"

#include "pnbd/laws.hpp"

namespace pnbd {

namespace {

std::vector<ObjPtr> finset_carriers(int max_points) {
  static const char* kNames[] = {"a", "b", "c"};
  std::vector<ObjPtr> out;
  for (int n = 0; n <= max_points && n <= 3; ++n)
    out.push_back(make_finset(std::vector<std::string>(kNames, kNames + n)));
  return out;
}

SearchResult search_hausdorff_nontrivial(const SearchOptions& opts) {
  SearchResult res;
  for (const auto& obj : finset_carriers(opts.max_points)) {
    if (obj->carrier_size() < 2) continue;
    enumerate_systems(obj, false, [&](const PreNbdSystem& s) {
      ++res.examined;
      auto v = is_hausdorff(s, opts.probe_bound);
      if (v.holds()) {
        res.found = true;
        Witness w;
        w.instance.context = Ctx::FinSet;
        witness_add_system(w.instance, "mu", "X", s);
        w.replay_args = {"space", "<file>", "--system", "mu", "--check", "hausdorff",
                         "--probe-bound", std::to_string(opts.probe_bound),
                         "--expect-pass"};
        w.note = "a Hausdorff space with at least two points";
        res.witness = std::move(w);
      }
      return !res.found;
    });
    if (res.found) break;
  }
  res.summary = res.found ? "witness found"
                          : "exhausted: no Hausdorff space with 2.." +
                                std::to_string(opts.max_points) + " points";
  return res;
}

SearchResult search_closed_not_proper(const SearchOptions& opts) {
  SearchResult res;
  auto carriers = finset_carriers(opts.max_points);
  for (const auto& dom : carriers) {
    for (const auto& cod : carriers) {
      for (const auto& f : all_morphisms(dom, cod)) {
        for (const auto& mu : all_systems(dom)) {
          for (const auto& phi : all_systems(cod)) {
            if (!is_pnbd_morphism(f, mu, phi).ok) continue;
            ++res.examined;
            if (!is_closed_morphism(f, mu, phi)) continue;
            auto v = is_proper(f, mu, phi, opts.probe_bound);
            if (v.status == VerdictStatus::Fails) {
              res.found = true;
              Witness w;
              w.instance.context = Ctx::FinSet;
              witness_add_system(w.instance, "mu", "X", mu);
              witness_add_system(w.instance, "phi", "Y", phi);
              witness_add_morphism(w.instance, "f", "X", "Y", f);
              w.replay_args = {"classify-mor", "<file>", "--mor", "f", "--src", "mu",
                               "--dst", "phi", "--check", "proper", "--probe-bound",
                               std::to_string(opts.probe_bound), "--expect-pass"};
              w.note = "closed morphism refuted by " +
                       (v.witness ? v.witness->note : std::string("a probe"));
              res.witness = std::move(w);
              res.summary = "witness found";
              return res;
            }
          }
        }
      }
    }
  }
  res.summary = "exhausted: every closed morphism held up to the probe bound";
  return res;
}

SearchResult search_dense_closed_gap(const SearchOptions& opts) {
  SearchResult res;
  auto carriers = finset_carriers(opts.max_points);
  for (const auto& dom : carriers) {
    for (const auto& cod : carriers) {
      for (const auto& f : all_morphisms(dom, cod)) {
        for (const auto& mu : all_systems(dom)) {
          for (const auto& phi : all_systems(cod)) {
            if (!is_pnbd_morphism(f, mu, phi).ok) continue;
            ++res.examined;
            auto dc = dense_check(f, mu, phi);
            if (dc.degenerate_gap) {
              res.found = true;
              Witness w;
              w.instance.context = Ctx::FinSet;
              witness_add_system(w.instance, "mu", "X", mu);
              witness_add_system(w.instance, "phi", "Y", phi);
              witness_add_morphism(w.instance, "f", "X", "Y", f);
              w.replay_args = {"classify-mor", "<file>", "--mor", "f", "--src", "mu",
                               "--dst", "phi", "--check", "dense-criterion",
                               "--probe-bound", std::to_string(opts.probe_bound),
                               "--expect-pass"};
              w.note = "definitional denseness and the closure criterion disagree";
              res.witness = std::move(w);
              res.summary = "witness found";
              return res;
            }
          }
        }
      }
    }
  }
  res.summary = "exhausted: the dense forms agree everywhere";
  return res;
}

SearchResult search_top_not_closed(const SearchOptions& opts) {
  SearchResult res;
  for (const auto& obj : finset_carriers(opts.max_points)) {
    if (obj->carrier_size() == 0) continue;
    enumerate_systems(obj, false, [&](const PreNbdSystem& s) {
      ++res.examined;
      if (closure(s, s.lat().top()) != s.lat().top()) {
        res.found = true;
        Witness w;
        w.instance.context = Ctx::FinSet;
        witness_add_system(w.instance, "mu", "X", s);
        w.replay_args = {"laws", "<file>", "--law", "CL4", "--expect-pass"};
        w.note = "a space whose top subobject is not closed";
        res.witness = std::move(w);
      }
      return !res.found;
    });
    if (res.found) break;
  }
  res.summary = res.found ? "witness found" : "exhausted: every top closed";
  return res;
}

}  // namespace

const std::vector<std::string>& search_targets() {
  static const std::vector<std::string> targets = {
      "hausdorff-nontrivial", "closed-not-proper", "dense-closed-gap",
      "top-not-closed"};
  return targets;
}

bool search_target_exists(const std::string& target) {
  for (const auto& t : search_targets())
    if (t == target) return true;
  return false;
}

SearchResult search_counterexample(const std::string& target,
                                   const SearchOptions& opts) {
  if (opts.max_points < 0 || opts.max_points > 3)
    throw DomainError("search: max points must be between 0 and 3");
  if (target == "hausdorff-nontrivial") return search_hausdorff_nontrivial(opts);
  if (target == "closed-not-proper") return search_closed_not_proper(opts);
  if (target == "dense-closed-gap") return search_dense_closed_gap(opts);
  if (target == "top-not-closed") return search_top_not_closed(opts);
  throw DomainError("unknown search target: " + target);
}

}  // namespace pnbd
