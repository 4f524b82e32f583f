#include "dfmo/oracle.hpp"

namespace dfmo {

const Evaluation* Oracle::evaluate(const MixedPoint& x) {
  ++calls_;
  if (auto it = cache_.find(x); it != cache_.end()) return &it->second;
  if (misses_ >= max_evals_) {
    ++refused_;
    return nullptr;
  }
  Evaluation e = problem_->evaluate(x);
  ++misses_;
  return &cache_.emplace(x, std::move(e)).first->second;
}

}  // namespace dfmo
