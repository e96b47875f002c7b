#include "bartor/lin.hpp"
#include "bartor/basis.hpp"

/* Lin<K> is header-only; this translation unit anchors the common instantiations
   so debug builds don't re-emit them in every object file. */
namespace bartor {
template class Lin<BasisElement>;
template class Lin<TupleKey>;
}  // namespace bartor
