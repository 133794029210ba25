#include "osx/asym_os.hpp"

namespace osx {

static AsymSpace space_over(std::shared_ptr<std::vector<CompletionPoint>> pts) {
  AsymSpace s;
  s.raw = [pts](int a, int b) {
    if (a == b) return ExtRat::of(0);
    DistanceResult d = distance_ext((*pts)[a], (*pts)[b]);
    if (d.factor.infinite) return ExtRat::inf();
    return ExtRat::of(d.factor.value - 1);
  };
  return s;
}

SequenceWindow os_window(std::vector<CompletionPoint> pts) {
  auto store = std::make_shared<std::vector<CompletionPoint>>(std::move(pts));
  SequenceWindow w{space_over(store), {}};
  for (size_t i = 0; i < store->size(); ++i) w.points.push_back((int)i);
  return w;
}

SequenceWindow os_windows_pair(std::vector<CompletionPoint> a,
                               std::vector<CompletionPoint> b,
                               SequenceWindow& second) {
  size_t na = a.size();
  std::vector<CompletionPoint> all = std::move(a);
  for (auto& p : b) all.push_back(std::move(p));
  auto store = std::make_shared<std::vector<CompletionPoint>>(std::move(all));
  AsymSpace sp = space_over(store);
  SequenceWindow first{sp, {}};
  for (size_t i = 0; i < na; ++i) first.points.push_back((int)i);
  second = SequenceWindow{sp, {}};
  for (size_t i = na; i < store->size(); ++i) second.points.push_back((int)i);
  return first;
}

}  // namespace osx
