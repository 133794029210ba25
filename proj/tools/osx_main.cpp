#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>

#include "osx/acceptance.hpp"
#include "osx/asym_os.hpp"
#include "osx/fixtures.hpp"
#include "osx/io.hpp"
#include "osx/oracle.hpp"

using nlohmann::json;
using namespace osx;

namespace {

std::vector<int> parse_id_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw MalformedInput("bad edge id: " + tok);
    }
  }
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(parse_rat(tok));
    } catch (const std::exception&) {
      throw MalformedInput("bad rational: " + tok);
    }
  }
  return out;
}

void emit(const json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << j.dump(2) << "\n";
}

json distance_json(const DistanceResult& d) {
  json j;
  j["factor"] = factor_str(d.factor);
  if (!d.factor.infinite) j["log"] = factor_log(d.factor);
  if (d.witness) j["witness"] = cyclic_str(d.witness->word);
  if (d.elliptic_failure) j["elliptic_failure"] = word_str(*d.elliptic_failure);
  return j;
}

void print_distance(const DistanceResult& d, bool as_json) {
  if (as_json) {
    emit(distance_json(d), true);
    return;
  }
  std::cout << "factor " << factor_str(d.factor);
  if (!d.factor.infinite) std::cout << "  (log " << factor_log(d.factor) << ")";
  if (d.witness) std::cout << "  witness " << cyclic_str(d.witness->word);
  if (d.elliptic_failure)
    std::cout << "  elliptic failure " << word_str(*d.elliptic_failure);
  std::cout << "\n";
}

json certificate_json(const Certificate& c) {
  json j;
  j["holds"] = c.holds;
  json recs = json::array();
  for (const EpsRecord& r : c.records) {
    json rj;
    rj["eps"] = rat_str(r.eps);
    rj["N"] = r.N;
    json kj = json::object();
    for (const auto& [n, k] : r.K) kj[std::to_string(n)] = k;
    rj["K"] = kj;
    recs.push_back(rj);
  }
  j["records"] = recs;
  if (c.witness) {
    j["witness"] = {{"eps", rat_str(c.witness->eps)},
                    {"n", c.witness->n},
                    {"k", c.witness->k}};
  }
  j["detail"] = c.detail;
  return j;
}

struct FixtureEntry {
  std::string name;
  MarkedGraph g;
};

std::vector<FixtureEntry> fixture_set() {
  std::vector<FixtureEntry> out;
  out.push_back({"rose2_half", rose2(Rat(1, 2), Rat(1, 2))});
  out.push_back({"rose2_skew", rose2(Rat(3, 4), Rat(1, 4))});
  out.push_back({"theta2_even", theta2(Rat(1, 3), Rat(1, 3), Rat(1, 3))});
  out.push_back({"dumbbell2", dumbbell2(Rat(1, 4), Rat(1, 4), Rat(1, 2))});
  out.push_back({"rose3", rose3(Rat(1, 3), Rat(1, 3), Rat(1, 3))});
  out.push_back({"theta3", theta3(Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4))});
  out.push_back(
      {"spectacles3", spectacles3(Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4))});
  out.push_back({"loop_splitting_a", loop_splitting_a().m});
  out.push_back({"loop_splitting_b", loop_splitting_b().m});
  out.push_back({"amalgam_ab", amalgam_ab().m});
  out.push_back({"pinched_barbell", pinched_barbell_splitting().m});
  return out;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact Lipschitz metric on small-rank graph moduli and its "
               "simplicial completion"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  int threads = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--threads", threads, "reserved; commands run single-threaded");

  std::string file_x, file_y, word_s, keep_s, sched_s, eps_s, words_file, dir_s;
  bool sym = false;
  int opt_i = 5, opt_m = 10;
  uint64_t seed = 7;
  std::string suite = "all", kind = "cauchy";
  std::vector<std::string> points_a, points_b;

  auto* c_dist = app.add_subcommand("distance", "stretch factor between interior points");
  c_dist->add_option("x", file_x)->required();
  c_dist->add_option("y", file_y)->required();
  c_dist->add_flag("--sym", sym, "product of the two one-way factors");

  auto* c_cdist = app.add_subcommand("cdistance", "extended distance between completion points");
  c_cdist->add_option("S", file_x)->required();
  c_cdist->add_option("T", file_y)->required();

  auto* c_len = app.add_subcommand("length", "translation length of a word");
  c_len->add_option("x", file_x)->required();
  c_len->add_option("-w,--word", word_s)->required();

  auto* c_cand = app.add_subcommand("candidates", "candidate loops of a point");
  c_cand->add_option("x", file_x)->required();

  auto* c_coll = app.add_subcommand("collapse", "collapse a forest and renormalize");
  c_coll->add_option("x", file_x)->required();
  c_coll->add_option("--edges", keep_s, "forest edge ids")->required();

  auto* c_face = app.add_subcommand("face", "restrict to a subgraph face");
  c_face->add_option("x", file_x)->required();
  c_face->add_option("--keep", keep_s, "edge ids spanning the face")->required();

  auto* c_fdist = app.add_subcommand("facedist", "distance to a candidate-image face");
  c_fdist->add_option("x", file_x)->required();
  c_fdist->add_option("--subgraph", keep_s, "edge ids")->required();

  auto* c_axes = app.add_subcommand("axes", "translation lengths on a probe set");
  c_axes->add_option("T", file_x)->required();
  c_axes->add_option("--words", words_file, "file with one word per line")->required();

  auto* c_pinch = app.add_subcommand("pinch", "shrink a subgraph along a schedule");
  c_pinch->add_option("x", file_x)->required();
  c_pinch->add_option("--edges", keep_s)->required();
  c_pinch->add_option("--schedule", sched_s, "decreasing rationals")->required();

  auto* c_approx = app.add_subcommand("approx", "interior approximation of a completion point");
  c_approx->add_option("T", file_x)->required();
  c_approx->add_option("--eps", eps_s)->required();

  auto* c_seq = app.add_subcommand("seq", "directional sequence checks");
  auto* c_seqchk = c_seq->add_subcommand("check");
  c_seqchk->add_option("--kind", kind)->check(CLI::IsMember({"cauchy", "admissible", "equiv"}));
  c_seqchk->add_option("--schedule", sched_s)->required();
  c_seqchk->add_option("points", points_a, "point files for the window")->required();
  c_seqchk->add_option("--other", points_b, "second window (equiv only)");
  c_seq->require_subcommand(1);

  auto* c_strict = app.add_subcommand("strictness", "axes-close, Lipschitz-far pair");
  c_strict->add_option("--i", opt_i);
  c_strict->add_option("--m", opt_m);

  auto* c_verify = app.add_subcommand("verify", "run the property suite");
  c_verify->add_option("--suite", suite)->check(CLI::IsMember({"all"}));
  c_verify->add_option("--seed", seed);

  auto* c_fix = app.add_subcommand("fixtures", "write the fixture corpus");
  c_fix->add_option("--dir", dir_s, "output directory (default $OSX_FIXTURES or .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*c_dist) {
    MarkedGraph x = load_marked_graph(file_x), y = load_marked_graph(file_y);
    if (sym) {
      Rat f = sym_distance(x, y);
      if (as_json)
        emit(json{{"factor", rat_str(f)}, {"log", rat_log(f)}}, true);
      else
        std::cout << "factor " << rat_str(f) << "  (log " << rat_log(f) << ")\n";
    } else {
      print_distance(distance(x, y), as_json);
    }
  } else if (*c_cdist) {
    CompletionPoint S = as_completion(load_marked_graph(file_x));
    CompletionPoint T = as_completion(load_marked_graph(file_y));
    print_distance(distance_ext(S, T), as_json);
  } else if (*c_len) {
    MarkedGraph x = load_marked_graph(file_x);
    Word w = parse_word(word_s, x.rank);
    Rat l = translation_length_ext(as_completion(x), w);
    if (as_json)
      emit(json{{"length", rat_str(l)}}, true);
    else
      std::cout << rat_str(l) << "\n";
  } else if (*c_cand) {
    MarkedGraph x = load_marked_graph(file_x);
    std::vector<Candidate> cs = candidates_ext(x);
    json arr = json::array();
    for (const Candidate& c : cs) {
      arr.push_back(json{{"kind", kind_name(c.kind)},
                         {"word", cyclic_str(c.word)},
                         {"loop", edge_path_str(x.g, c.loop)}});
    }
    if (as_json) {
      emit(arr, true);
    } else {
      for (const Candidate& c : cs)
        std::cout << kind_name(c.kind) << "  " << cyclic_str(c.word) << "  ["
                  << edge_path_str(x.g, c.loop) << "]\n";
    }
  } else if (*c_coll) {
    MarkedGraph x = load_marked_graph(file_x);
    emit(marked_graph_to_json(collapse_forest(x, parse_id_list(keep_s))),
         as_json);
  } else if (*c_face) {
    CompletionPoint x = as_completion(load_marked_graph(file_x));
    emit(marked_graph_to_json(face(x, parse_id_list(keep_s)).m), as_json);
  } else if (*c_fdist) {
    MarkedGraph x = load_marked_graph(file_x);
    Rat f = face_distance(x, parse_id_list(keep_s));
    if (as_json)
      emit(json{{"factor", rat_str(f)}, {"log", rat_log(f)}}, true);
    else
      std::cout << "factor " << rat_str(f) << "  (log " << rat_log(f) << ")\n";
  } else if (*c_axes) {
    CompletionPoint T = as_completion(load_marked_graph(file_x));
    std::ifstream in(words_file);
    if (!in) throw MalformedInput("cannot open word file: " + words_file);
    std::vector<Word> probes;
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) probes.push_back(parse_word(line, T.m.rank));
    LengthVector v = axes_vector(T, probes);
    json arr = json::array();
    for (size_t k = 0; k < v.probes.size(); ++k)
      arr.push_back(json{{"word", cyclic_str(v.probes[k])},
                         {"length", rat_str(v.values[k])}});
    if (as_json) {
      emit(arr, true);
    } else {
      for (size_t k = 0; k < v.probes.size(); ++k)
        std::cout << cyclic_str(v.probes[k]) << "  " << rat_str(v.values[k])
                  << "\n";
    }
  } else if (*c_pinch) {
    MarkedGraph x = load_marked_graph(file_x);
    std::vector<MarkedGraph> seq =
        pinch_sequence(x, parse_id_list(keep_s), parse_rat_list(sched_s));
    json arr = json::array();
    for (const MarkedGraph& g : seq) arr.push_back(marked_graph_to_json(g));
    emit(arr, as_json);
  } else if (*c_approx) {
    CompletionPoint T = as_completion(load_marked_graph(file_x));
    emit(marked_graph_to_json(approximate_from_interior(T, parse_rat(eps_s))),
         as_json);
  } else if (*c_seqchk && *c_seqchk) {
    std::vector<Rat> eps = parse_rat_list(sched_s);
    auto load_pts = [](const std::vector<std::string>& files) {
      std::vector<CompletionPoint> pts;
      for (const std::string& f : files)
        pts.push_back(as_completion(load_marked_graph(f)));
      return pts;
    };
    if (kind == "equiv") {
      if (points_b.empty())
        throw MalformedInput("equiv needs --other with a second window");
      SequenceWindow wb;
      SequenceWindow wa = os_windows_pair(load_pts(points_a), load_pts(points_b), wb);
      Certificate c = equivalent(wa, wb, eps);
      if (as_json)
        emit(certificate_json(c), true);
      else
        std::cout << (c.holds ? "EQUIVALENT" : "NOT EQUIVALENT") << "  "
                  << c.detail << "\n";
    } else {
      SequenceWindow w = os_window(load_pts(points_a));
      Certificate c = kind == "cauchy" ? check_forwards_cauchy(w, eps)
                                       : check_admissible(w, eps);
      if (as_json)
        emit(certificate_json(c), true);
      else
        std::cout << (c.holds ? "HOLDS" : "FAILS") << "  " << c.detail << "\n";
    }
  } else if (*c_strict) {
    StrictnessPair sp = strictness_family(opt_i, opt_m);
    DistanceResult d = distance_ext(sp.y, sp.x);
    json j;
    j["x"] = marked_graph_to_json(sp.x.m);
    j["y"] = marked_graph_to_json(sp.y.m);
    j["main_len"] = rat_str(sp.main_len);
    j["small_len"] = rat_str(sp.small_len);
    j["factor_y_to_x"] = factor_str(d.factor);
    emit(j, as_json);
  } else if (*c_verify) {
    std::vector<CheckResult> results = run_acceptance(seed);
    int passed = 0;
    if (as_json) {
      json arr = json::array();
      for (const CheckResult& r : results) {
        arr.push_back(json{{"id", r.id},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"detail", r.detail}});
        if (r.pass) ++passed;
      }
      emit(json{{"results", arr},
                {"passed", passed},
                {"total", (int)results.size()}},
           true);
    } else {
      for (const CheckResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". "
                  << r.name << "  (" << r.detail << ")\n";
        if (r.pass) ++passed;
      }
      std::cout << passed << "/" << results.size() << " properties hold\n";
    }
    if (passed != (int)results.size()) return 2;
  } else if (*c_fix) {
    std::string dir = dir_s;
    if (dir.empty()) {
      const char* env = std::getenv("OSX_FIXTURES");
      dir = env ? env : ".";
    }
    json names = json::array();
    for (const FixtureEntry& f : fixture_set()) {
      save_marked_graph(f.g, dir + "/" + f.name + ".json");
      names.push_back(f.name + ".json");
    }
    if (as_json)
      emit(json{{"dir", dir}, {"files", names}}, true);
    else
      std::cout << "wrote " << names.size() << " fixtures to " << dir << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInvariant& e) {
    std::cerr << "internal error (bug): " << e.what() << "\n";
    return 3;
  }
}
