#ifndef HFZF_ORDINALS_HPP
#define HFZF_ORDINALS_HPP

#include "hfzf/hset.hpp"
#include "hfzf/recursion.hpp"

namespace hfzf {

bool is_transset(HSet a);
bool is_ord(HSet a);
bool lt(HSet a, HSet b);  // a in b and Ord(b)
bool is_limit(HSet a);    // always false on HF inputs; decided literally

// The ordinal k = {0,...,k-1}. The infinite set of naturals has no HF
// realization; consumers take or infer a sufficient bound.
HSet nat_upto(Ctx& ctx, std::uint32_t k);

// nat_case(a,b,0) = a and nat_case(a,b,succ(m)) = b(m); anything that is
// neither zero nor a successor fails the description.
HSet nat_case(HSet a, const SetFn& b, HSet k);

// Primitive recursion via wfrec over Memrel of a sufficient segment.
HSet nat_rec(HSet a, const BinFn& b, HSet k);

HSet nat_add(HSet m, HSet n);

}  // namespace hfzf

#endif
