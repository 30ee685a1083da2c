#ifndef HFZF_RELATIONS_HPP
#define HFZF_RELATIONS_HPP

#include "hfzf/hset.hpp"

namespace hfzf {

// Binary relations are sets whose elements are all Kuratowski pairs.
// Operations taking a relation throw NotARelation on anything else.
bool is_relation(HSet r);
void require_relation(HSet r, const char* who);

HSet prod(HSet a, HSet b);  // Cartesian product a x b

HSet converse(HSet r);
HSet rel_domain(HSet r);
HSet rel_range(HSet r);
HSet field(HSet r);
HSet image(HSet r, HSet a);                  // r``a
HSet inv_image_singleton(HSet r, HSet x);    // {y | <y,x> in r}
HSet compose(HSet r, HSet s);                // r o s = {<x,z> | Ey. <x,y> in s, <y,z> in r}
HSet id_on(HSet a);

// Membership internalized on A: {<x,y> | x,y in A, x in y}.
HSet memrel(HSet a);

// Decided by cycle detection on field(r); on finite relations this agrees
// with the minimal-element criterion.
bool is_wf(HSet r);
bool is_transitive_rel(HSet r);

// Reflexive/transitive closure as the least fixedpoint of
// s |-> id(field(r)) U (r o s) over field(r) x field(r); r+ = r o r*.
HSet rtrancl(HSet r);
HSet trancl(HSet r);

// Functions are single-valued relations.
bool is_function(HSet f);
bool is_injective(HSet f);

}  // namespace hfzf

#endif
