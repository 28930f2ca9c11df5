#pragma once

#include "distop/persistence.hpp"

#include <map>
#include <vector>

namespace distop::detail {

// Accumulates persistence pairs and emits them in canonical order.
class PairCollector {
public:
  void add(int degree, const Simplex& birth, const Simplex* death);
  PersistenceResult finish(int max_degree, int truncated_degree);

private:
  struct Entry {
    PersistencePair point;
    CriticalPair critical;
  };
  std::map<int, std::vector<Entry>> entries_;
};

}  // namespace distop::detail
