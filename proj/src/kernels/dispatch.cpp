#include "sbd/kernels.hpp"

#include <cstdlib>

namespace sbd::kern {

#if !defined(SBD_WITH_AVX2)
const Ops* avx2_ops() { return nullptr; }
#endif
#if !defined(SBD_WITH_NEON)
const Ops* neon_ops() { return nullptr; }
#endif

namespace {

struct Selection {
  const Ops* ops;
  const char* name;
};

Selection select() {
  if (std::getenv("SBD_FORCE_SCALAR") != nullptr) return {&scalar_ops, "scalar"};
  if (const Ops* o = avx2_ops()) return {o, "avx2"};
  if (const Ops* o = neon_ops()) return {o, "neon"};
  return {&scalar_ops, "scalar"};
}

const Selection& selection() {
  static const Selection s = select();
  return s;
}

}  // namespace

const Ops& active() { return *selection().ops; }
const char* active_name() { return selection().name; }

}  // namespace sbd::kern
