#include "osx/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "osx/asym_os.hpp"
#include "osx/fixtures.hpp"
#include "osx/io.hpp"
#include "osx/oracle.hpp"

namespace osx {

namespace {

CheckResult result(int id, const std::string& name, bool pass,
                   const std::string& detail) {
  return {id, name, pass, detail};
}

std::string plural(int n, const char* what) {
  return std::to_string(n) + " " + what;
}

CheckResult candidate_sup(std::mt19937_64& rng) {
  int bad = 0, total = 0;
  for (int r : {2, 3}) {
    int pairs = (r == 2) ? 170 : 30;
    for (int t = 0; t < pairs; ++t) {
      MarkedGraph x = random_point(rng, r), y = random_point(rng, r);
      Rat factor = distance(x, y).factor.value;
      Rat oracle = brute_force_max_stretch(x, y, 12);
      ++total;
      if (factor != oracle) ++bad;
    }
  }
  return result(1, "candidate-sup equals exhaustive word maximum", bad == 0,
                plural(total - bad, "of") + " " + std::to_string(total) +
                    " random pairs matched exactly");
}

CheckResult asymmetry_witness() {
  MarkedGraph x = rose2(Rat(1, 2), Rat(1, 2)), y = rose2(Rat(3, 4), Rat(1, 4));
  DistanceResult fwd = distance(x, y), rev = distance(y, x);
  bool pass = fwd.factor == StretchFactor::of(Rat(3, 2)) &&
              rev.factor == StretchFactor::of(Rat(2)) && fwd.witness &&
              cyclic_str(fwd.witness->word) == "a" && rev.witness &&
              cyclic_str(rev.witness->word) == "b";
  return result(2, "rose pair factors 3/2 and 2 with witnesses a and b", pass,
                "forward " + factor_str(fwd.factor) + ", reverse " +
                    factor_str(rev.factor));
}

CheckResult triangle_inequality(std::mt19937_64& rng) {
  int bad = 0, total = 0;
  for (int r : {2, 3}) {
    int triples = (r == 2) ? 400 : 100;
    for (int t = 0; t < triples; ++t) {
      MarkedGraph x = random_point(rng, r), y = random_point(rng, r),
                  z = random_point(rng, r);
      Rat xz = distance(x, z).factor.value;
      Rat xy = distance(x, y).factor.value;
      Rat yz = distance(y, z).factor.value;
      ++total;
      if (xz > xy * yz) ++bad;
    }
  }
  return result(3, "multiplicative triangle inequality", bad == 0,
                plural(total, "random triples") + ", " + plural(bad, "violations"));
}

CheckResult isometric_action(std::mt19937_64& rng) {
  int bad = 0;
  std::uniform_int_distribution<int> len_d(1, 8);
  for (int t = 0; t < 100; ++t) {
    int r = 2 + (t % 2);
    MarkedGraph x = random_point(rng, r), y = random_point(rng, r);
    EndoMap phi = random_nielsen_product(rng, r, len_d(rng));
    Rat before = distance(x, y).factor.value;
    Rat after = distance(act(x, phi), act(y, phi)).factor.value;
    if (before != after) ++bad;
  }
  return result(4, "the automorphism action preserves distances", bad == 0,
                plural(100 - bad, "of 100 instances matched exactly"));
}

CheckResult face_formula(std::mt19937_64& rng) {
  int bad = 0, checked = 0;
  for (int t = 0; t < 50; ++t) {
    int r = 2 + (t % 2);
    MarkedGraph x = random_point(rng, r);
    for (const Candidate& c : candidates(x)) {
      std::set<int> support;
      for (int d : c.loop) support.insert(dart_edge(d));
      std::vector<int> ids;
      Rat vol = 0;
      for (int e : support) {
        ids.push_back(x.g.edges[e].id);
        vol += x.g.edges[e].len;
      }
      ++checked;
      try {
        if (face_distance(x, ids) != 1 / vol) ++bad;
      } catch (const std::exception&) {
        ++bad;
      }
    }
  }
  return result(5, "face distance equals the reciprocal volume", bad == 0,
                plural(checked, "candidate-image subgraphs checked") + ", " +
                    plural(bad, "failures"));
}

CheckResult rigidity() {
  std::vector<CompletionPoint> fam = rigidity_family();
  int bad = 0;
  for (size_t i = 0; i < fam.size(); ++i) {
    for (size_t j = 0; j < fam.size(); ++j) {
      if (i == j) {
        if (!equals(fam[i], fam[j])) ++bad;
        continue;
      }
      DistanceResult fwd = distance_ext(fam[i], fam[j]);
      DistanceResult rev = distance_ext(fam[j], fam[i]);
      bool fwd_apart = fwd.factor.infinite || fwd.factor.value > 1;
      bool rev_apart = rev.factor.infinite || rev.factor.value > 1;
      if (!fwd_apart || !rev_apart) ++bad;
    }
  }
  return result(6, "zero distance only on the diagonal", bad == 0,
                std::to_string(fam.size()) + " fixture points, " +
                    plural(bad, "violations"));
}

// Orientation-stable structural key: the positive darts a loop crosses, up to
// rotation, plus the shape.
std::string pinched_key(const MarkedGraph& g, const Candidate& c) {
  std::vector<int> pos;
  for (int d : c.loop)
    if (g.g.edges[dart_edge(d)].len > 0) pos.push_back(d);
  std::vector<int> best = pos;
  for (size_t r = 1; r < pos.size(); ++r) {
    std::vector<int> rot(pos.begin() + r, pos.end());
    rot.insert(rot.end(), pos.begin(), pos.begin() + r);
    if (rot < best) best = rot;
  }
  std::string key = std::string(kind_name(c.kind)) + ":";
  for (int d : best) key += std::to_string(d) + ",";
  return key;
}

CheckResult element_independence() {
  std::vector<std::pair<CompletionPoint, CompletionPoint>> cases = {
      {loop_splitting_a(), amalgam_ab()},
      {loop_splitting_b(), amalgam_ab()},
      {pinched_barbell_splitting(), amalgam_ab()},
      {pinched_barbell_splitting(), loop_splitting_a()},
      {amalgam_ab(), amalgam_ab()},
  };
  std::vector<GroupChoice> choices = {{0, 1}, {0, -1}, {0, 2}, {1, 3}, {0, -2}};
  int bad = 0, keys = 0;
  for (const auto& [S, T] : cases) {
    std::map<std::string, std::vector<Rat>> stretches;
    for (const GroupChoice& gc : choices) {
      auto chooser = [gc](int, int) { return gc; };
      for (const Candidate& c : candidates_ext(S.m, chooser)) {
        if (c.kind == CandidateKind::Circle ||
            c.kind == CandidateKind::FigureEight ||
            c.kind == CandidateKind::Barbell)
          continue;
        Rat ls = translation_length_ext(S, c.word.word());
        Rat lt = translation_length_ext(T, c.word.word());
        stretches[pinched_key(S.m, c)].push_back(lt / ls);
      }
    }
    for (const auto& [key, vals] : stretches) {
      ++keys;
      if (vals.size() != choices.size()) {
        ++bad;
        continue;
      }
      for (const Rat& v : vals)
        if (v != vals.front()) {
          ++bad;
          break;
        }
    }
  }
  return result(7, "pinched-candidate stretch ignores the element choice",
                bad == 0 && keys > 0,
                plural(keys, "candidate shapes across 5 choices") + ", " +
                    plural(bad, "mismatches"));
}

CheckResult pinch_cauchy() {
  std::vector<Rat> schedule;
  for (int i = 1; i <= 12; ++i) schedule.push_back(Rat(Int(1), Int(1) << i));
  std::vector<MarkedGraph> seq =
      pinch_sequence(rose2(Rat(1, 2), Rat(1, 2)), {2}, schedule);
  std::vector<CompletionPoint> pts;
  for (const MarkedGraph& g : seq) pts.push_back(as_completion(g));
  SequenceWindow win = os_window(pts);
  std::vector<Rat> eps;
  for (int j = 1; j <= 8; ++j) eps.push_back(Rat(Int(1), Int(1) << j));
  Certificate fwd = check_forwards_cauchy(win, eps);
  bool backwards_grow = true;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j) {
      Rat f = distance(seq[j], seq[i]).factor.value;
      if (f < Rat(Int(1) << (j - i), Int(1))) backwards_grow = false;
    }
  return result(8, "pinching is forwards Cauchy but not backwards",
                fwd.holds && backwards_grow,
                std::string("forwards ") + (fwd.holds ? "HOLDS" : "FAILS") +
                    ", backwards growth " +
                    (backwards_grow ? "confirmed" : "violated"));
}

CheckResult limit_attainment() {
  int bad = 0;
  for (const CompletionPoint& T :
       {amalgam_ab(), loop_splitting_a(), pinched_barbell_splitting()}) {
    Rat prev = 0;
    for (int i = 1; i <= 10; ++i) {
      Rat eps(Int(1), Int(1) << i);
      MarkedGraph xi = approximate_from_interior(T, eps);
      if (!validate(xi).empty()) ++bad;
      DistanceResult d = distance_ext(as_completion(xi), T);
      if (d.factor.infinite || d.factor.value < 1 ||
          d.factor.value > 1 / (1 - eps))
        ++bad;
      if (i > 1 && d.factor.value > prev) ++bad;
      prev = d.factor.value;
    }
  }
  return result(9, "interior approximations converge onto the limit point",
                bad == 0, "3 targets, 10 scales each, " + plural(bad, "violations"));
}

CheckResult axes_strictness() {
  int m = 10;
  std::vector<Rat> factors;
  int bad = 0;
  std::vector<Word> probes = {Word({1}), Word({2})};
  for (int i = 2; i <= 10; ++i) {
    StrictnessPair sp = strictness_family(i, m);
    LengthVector vx = axes_vector(sp.x, probes);
    LengthVector vy = axes_vector(sp.y, probes);
    for (size_t k = 0; k < probes.size(); ++k) {
      Rat diff = vx.values[k] - vy.values[k];
      if (diff < 0) diff = -diff;
      if (!(diff < Rat(1, m))) ++bad;
    }
    DistanceResult d = distance_ext(sp.y, sp.x);
    if (d.factor.infinite || d.factor.value != 1 / sp.main_len) ++bad;
    factors.push_back(d.factor.value);
  }
  Rat bound = *std::min_element(factors.begin(), factors.end());
  if (!(bound > 1)) ++bad;
  for (const Rat& f : factors)
    if (f < bound) ++bad;
  return result(10, "axes proximity with Lipschitz separation", bad == 0,
                "separation bound " + rat_str(bound) + ", " +
                    plural(bad, "violations"));
}

// Reduced words of the subgroup generated by gens, by breadth-first closure
// under generator multiplication up to the length cap.
std::unordered_set<std::string> subgroup_closure(const std::vector<Word>& gens,
                                                 int cap) {
  std::unordered_set<std::string> seen;
  std::vector<Word> queue{Word()};
  seen.insert("");
  while (!queue.empty()) {
    Word w = std::move(queue.back());
    queue.pop_back();
    for (const Word& g : gens) {
      for (const Word& step : {g, word_inverse(g)}) {
        Word next = concat(w, step);
        if ((int)next.size() > cap) continue;
        if (seen.insert(word_str(next)).second) queue.push_back(next);
      }
    }
  }
  return seen;
}

CheckResult oracle_agreement(std::mt19937_64& rng) {
  int bad = 0;
  std::uniform_int_distribution<int> ngens_d(1, 3), glen_d(1, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<Word> gens;
    int ng = ngens_d(rng);
    for (int k = 0; k < ng; ++k) gens.push_back(random_word(rng, 2, glen_d(rng)));
    SubgroupGraph h = stallings_graph(gens, 2);
    auto closure = subgroup_closure(gens, 12);
    for (int k = 0; k < 10; ++k) {
      Word w = reduce(random_word(rng, 2, 8));
      bool graph_in = contains(h, w);
      bool brute_in = closure.count(word_str(w)) > 0;
      if (graph_in != brute_in) ++bad;
    }
  }

  // ellipticity: Serre's criterion against exhaustive short elements
  std::vector<CompletionPoint> pts = {loop_splitting_a(), loop_splitting_b(),
                                      amalgam_ab(), pinched_barbell_splitting(),
                                      as_completion(theta2(Rat(0), Rat(1, 4),
                                                           Rat(3, 4)))};
  std::uniform_int_distribution<int> pt_d(0, (int)pts.size() - 1),
      ng2_d(1, 2), wlen_d(1, 4);
  for (int t = 0; t < 100; ++t) {
    const CompletionPoint& T = pts[pt_d(rng)];
    std::vector<Word> gens;
    int ng = ng2_d(rng);
    for (int k = 0; k < ng; ++k) gens.push_back(random_word(rng, 2, wlen_d(rng)));
    bool serre = is_elliptic(T, gens);
    SubgroupGraph h = stallings_graph(gens, 2);
    bool brute = true;
    // every reduced word of length <= 8 lying in the subgroup must vanish
    std::function<void(Word&)> walk = [&](Word& w) {
      if (!brute) return;
      if (!w.empty() && contains(h, w) && translation_length_ext(T, w) != 0) {
        brute = false;
        return;
      }
      if ((int)w.size() == 8) return;
      for (Letter c : {1, -1, 2, -2}) {
        if (!w.l.empty() && w.l.back() == -c) continue;
        w.l.push_back(c);
        walk(w);
        w.l.pop_back();
      }
    };
    Word w;
    walk(w);
    if (serre != brute) ++bad;
  }
  return result(11, "subgroup machinery matches brute-force enumeration",
                bad == 0, "200 instances, " + plural(bad, "mismatches"));
}

CheckResult infinite_detection() {
  int bad = 0;
  CompletionPoint S = loop_splitting_a();
  for (const CompletionPoint& T : infinity_targets())
    if (!distance_ext(S, T).factor.infinite) ++bad;
  // splittings where the source vertex group stays elliptic are reachable
  for (const CompletionPoint& T : {amalgam_ab(), pinched_barbell_splitting()})
    if (distance_ext(S, T).factor.infinite) ++bad;
  // interior sources reach the splitting at finite cost
  for (const MarkedGraph& x :
       {rose2(Rat(1, 2), Rat(1, 2)), theta2(Rat(1, 3), Rat(1, 3), Rat(1, 3)),
        dumbbell2(Rat(1, 4), Rat(1, 4), Rat(1, 2))}) {
    DistanceResult d = distance_ext(as_completion(x), S);
    if (d.factor.infinite) ++bad;
  }
  return result(12, "one-edge-loop splitting repels every other fixture",
                bad == 0, plural(bad, "violations"));
}

}  // namespace

std::vector<CheckResult> run_acceptance(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  out.push_back(candidate_sup(rng));
  out.push_back(asymmetry_witness());
  out.push_back(triangle_inequality(rng));
  out.push_back(isometric_action(rng));
  out.push_back(face_formula(rng));
  out.push_back(rigidity());
  out.push_back(element_independence());
  out.push_back(pinch_cauchy());
  out.push_back(limit_attainment());
  out.push_back(axes_strictness());
  out.push_back(oracle_agreement(rng));
  out.push_back(infinite_detection());
  return out;
}

}  // namespace osx
