#include "osx/fixtures.hpp"

namespace osx {

namespace {

MarkedGraph rose(std::vector<Rat> lens) {
  MarkedGraph x;
  x.rank = (int)lens.size();
  x.g.vertex_ids = {1};
  for (int i = 0; i < x.rank; ++i)
    x.g.edges.push_back({i + 1, 1, 1, lens[i]});
  x.marking.base_vertex = 1;
  for (int i = 0; i < x.rank; ++i) x.marking.images.push_back({dart(i, false)});
  return x;
}

// Two vertices with `k` parallel edges; generator i is e_i * e_k^-1.
MarkedGraph banana(std::vector<Rat> lens) {
  int k = (int)lens.size();
  MarkedGraph x;
  x.rank = k - 1;
  x.g.vertex_ids = {1, 2};
  for (int i = 0; i < k; ++i) x.g.edges.push_back({i + 1, 1, 2, lens[i]});
  x.marking.base_vertex = 1;
  for (int i = 0; i + 1 < k; ++i)
    x.marking.images.push_back({dart(i, false), dart(k - 1, true)});
  return x;
}

}  // namespace

MarkedGraph rose2(const Rat& la, const Rat& lb) { return rose({la, lb}); }
MarkedGraph rose3(const Rat& la, const Rat& lb, const Rat& lc) {
  return rose({la, lb, lc});
}
MarkedGraph theta2(const Rat& l1, const Rat& l2, const Rat& l3) {
  return banana({l1, l2, l3});
}
MarkedGraph theta3(const Rat& l1, const Rat& l2, const Rat& l3, const Rat& l4) {
  return banana({l1, l2, l3, l4});
}

MarkedGraph dumbbell2(const Rat& lleft, const Rat& lbar, const Rat& lright) {
  MarkedGraph x;
  x.rank = 2;
  x.g.vertex_ids = {1, 2};
  x.g.edges = {{1, 1, 1, lleft}, {2, 1, 2, lbar}, {3, 2, 2, lright}};
  x.marking.base_vertex = 1;
  x.marking.images = {{dart(0, false)},
                      {dart(1, false), dart(2, false), dart(1, true)}};
  return x;
}

MarkedGraph spectacles3(const Rat& lleft, const Rat& lbar1, const Rat& lbar2,
                        const Rat& lright) {
  MarkedGraph x;
  x.rank = 3;
  x.g.vertex_ids = {1, 2};
  x.g.edges = {{1, 1, 1, lleft},
               {2, 1, 2, lbar1},
               {3, 1, 2, lbar2},
               {4, 2, 2, lright}};
  x.marking.base_vertex = 1;
  x.marking.images = {{dart(0, false)},
                      {dart(1, false), dart(3, false), dart(1, true)},
                      {dart(2, false), dart(1, true)}};
  return x;
}

CompletionPoint loop_splitting_a() {
  MarkedGraph x = rose2(1, 0);
  return as_completion(x);
}

CompletionPoint loop_splitting_b() {
  MarkedGraph x = rose2(0, 1);
  return as_completion(x);
}

CompletionPoint amalgam_ab() {
  MarkedGraph x;
  x.rank = 2;
  x.g.vertex_ids = {1, 2};
  x.g.edges = {{1, 1, 1, Rat(0)},   // zero loop carrying a
               {2, 1, 2, Rat(1)},   // the splitting edge
               {3, 2, 2, Rat(0)}};  // zero loop carrying b
  x.marking.base_vertex = 1;
  x.marking.images = {{dart(0, false)},
                      {dart(1, false), dart(2, false), dart(1, true)}};
  return as_completion(x);
}

CompletionPoint pinched_barbell_splitting() {
  MarkedGraph x;
  x.rank = 2;
  x.g.vertex_ids = {1, 2};
  x.g.edges = {{1, 1, 1, Rat(1, 2)},   // circle a
               {2, 1, 2, Rat(1, 2)},   // bar
               {3, 2, 2, Rat(0)}};     // pinched bell carrying b
  x.marking.base_vertex = 1;
  x.marking.images = {{dart(0, false)},
                      {dart(1, false), dart(2, false), dart(1, true)}};
  return as_completion(x);
}

std::vector<CompletionPoint> rigidity_family() {
  std::vector<CompletionPoint> out;
  out.push_back(as_completion(rose2(Rat(1, 2), Rat(1, 2))));
  out.push_back(as_completion(rose2(Rat(1, 3), Rat(2, 3))));
  out.push_back(as_completion(rose2(Rat(2, 3), Rat(1, 3))));
  out.push_back(as_completion(theta2(Rat(1, 3), Rat(1, 3), Rat(1, 3))));
  out.push_back(as_completion(theta2(Rat(1, 6), Rat(1, 3), Rat(1, 2))));
  out.push_back(loop_splitting_a());
  out.push_back(loop_splitting_b());
  out.push_back(amalgam_ab());
  out.push_back(pinched_barbell_splitting());
  out.push_back(as_completion(theta2(Rat(0), Rat(1, 4), Rat(3, 4))));
  EndoMap phi;
  phi.rank = 2;
  phi.images = {parse_word("ab", 2), parse_word("b", 2)};
  out.push_back(as_completion(act(rose2(Rat(1, 2), Rat(1, 2)), phi)));
  return out;
}

std::vector<CompletionPoint> infinity_targets() {
  std::vector<CompletionPoint> out;
  out.push_back(as_completion(rose2(Rat(1, 2), Rat(1, 2))));
  out.push_back(as_completion(rose2(Rat(1, 3), Rat(2, 3))));
  out.push_back(as_completion(theta2(Rat(1, 3), Rat(1, 3), Rat(1, 3))));
  out.push_back(as_completion(theta2(Rat(1, 6), Rat(1, 3), Rat(1, 2))));
  out.push_back(as_completion(dumbbell2(Rat(1, 4), Rat(1, 4), Rat(1, 2))));
  out.push_back(loop_splitting_b());
  out.push_back(as_completion(rose2(Rat(1, 4), Rat(3, 4))));
  out.push_back(as_completion(theta2(Rat(0), Rat(1, 4), Rat(3, 4))));
  EndoMap phi;
  phi.rank = 2;
  phi.images = {parse_word("ab", 2), parse_word("b", 2)};
  out.push_back(as_completion(act(rose2(Rat(1, 2), Rat(1, 2)), phi)));
  return out;
}

Word random_word(std::mt19937_64& rng, int rank, int maxlen) {
  std::uniform_int_distribution<int> len_d(1, maxlen);
  std::uniform_int_distribution<int> gen_d(1, rank);
  std::uniform_int_distribution<int> sign_d(0, 1);
  int len = len_d(rng);
  std::vector<Letter> l;
  while ((int)l.size() < len) {
    Letter c = gen_d(rng) * (sign_d(rng) ? 1 : -1);
    if (!l.empty() && l.back() == -c) continue;
    l.push_back(c);
  }
  return Word(l);
}

EndoMap random_nielsen_product(std::mt19937_64& rng, int rank, int nmoves) {
  std::uniform_int_distribution<int> gen_d(1, rank);
  std::uniform_int_distribution<int> kind_d(0, 2);
  std::uniform_int_distribution<int> sign_d(0, 1);
  EndoMap phi = EndoMap::identity(rank);
  for (int step = 0; step < nmoves; ++step) {
    EndoMap m = EndoMap::identity(rank);
    int kind = kind_d(rng);
    int i = gen_d(rng);
    if (kind == 0) {
      m.images[i - 1] = Word({-i});  // invert one generator
    } else if (kind == 1) {
      int j = gen_d(rng);
      if (j == i) j = i % rank + 1;
      if (j == i) continue;  // rank 1
      std::swap(m.images[i - 1], m.images[j - 1]);
    } else {
      int j = gen_d(rng);
      if (j == i) j = i % rank + 1;
      if (j == i) continue;
      Letter s = sign_d(rng) ? j : -j;
      m.images[i - 1] = Word({i, s});  // x_i -> x_i x_j^s
    }
    phi = compose_endo(phi, m);
  }
  return phi;
}

MarkedGraph random_point(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> topo_d(0, 2);
  auto weights = [&](int k) {
    std::uniform_int_distribution<int> w_d(1, 6);
    std::vector<Rat> lens;
    Rat total = 0;
    for (int i = 0; i < k; ++i) {
      lens.push_back(w_d(rng));
      total += lens.back();
    }
    for (Rat& l : lens) l /= total;
    return lens;
  };
  MarkedGraph x;
  int topo = topo_d(rng);
  if (rank == 2) {
    if (topo == 0) {
      auto l = weights(2);
      x = rose2(l[0], l[1]);
    } else if (topo == 1) {
      auto l = weights(3);
      x = theta2(l[0], l[1], l[2]);
    } else {
      auto l = weights(3);
      x = dumbbell2(l[0], l[1], l[2]);
    }
  } else if (rank == 3) {
    if (topo == 0) {
      auto l = weights(3);
      x = rose3(l[0], l[1], l[2]);
    } else if (topo == 1) {
      auto l = weights(4);
      x = theta3(l[0], l[1], l[2], l[3]);
    } else {
      auto l = weights(4);
      x = spectacles3(l[0], l[1], l[2], l[3]);
    }
  } else {
    throw DomainError("random_point supports ranks 2 and 3");
  }
  // a short twist keeps candidate words short while varying the marking
  std::uniform_int_distribution<int> moves_d(0, 2);
  return act(x, random_nielsen_product(rng, rank, moves_d(rng)));
}

}  // namespace osx
