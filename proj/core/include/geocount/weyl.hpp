#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "geocount/root_datum.hpp"

namespace geocount {

// Group element as a matrix acting on column vectors, together with a
// shortest word in the simple reflections (indices into simple_indices of
// the generating datum; the identity has the empty word).
struct WeylElement {
    RationalMatrix matrix;
    std::vector<std::size_t> word;
};

// Finite reflection group generated by the simple reflections of a datum.
// elements[0] is the identity; the order is breadth first by word length,
// then lexicographic by word, so it is deterministic for a given datum.
class WeylGroup {
public:
    std::size_t size() const { return elements_.size(); }
    const WeylElement& element(std::size_t i) const { return elements_[i]; }

    // Index of the element with this matrix; throws NotFound when absent.
    std::size_t index_of(const RationalMatrix& m) const;
    bool contains(const RationalMatrix& m) const;

    std::size_t multiply(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const;

    RationalVector action(std::size_t i, const RationalVector& h) const;

    friend WeylGroup enumerate_weyl_group(const RootDatum& datum, std::uint64_t max_order);

private:
    std::vector<WeylElement> elements_;
    std::map<RationalMatrix, std::size_t> index_;
};

// Matrix of the reflection x -> x - a(x) H_a^vee in the root hyperplane.
RationalMatrix reflection_matrix(const RootDatum& datum, std::size_t root_index);

// Closure of the simple reflections.  Every element is checked to preserve
// the gram form and permute the roots with multiplicities.  Enumeration
// aborts with GroupTooLarge once more than max_order distinct elements
// appear.
WeylGroup enumerate_weyl_group(const RootDatum& datum, std::uint64_t max_order = 1000000);

// Subgroup given by its sorted element indices; generator_indices lists a
// known generating set when one is canonical (reflection subgroups), and is
// empty otherwise.
struct SubgroupDescriptor {
    std::vector<std::size_t> element_indices;
    std::vector<std::size_t> generator_indices;

    std::size_t order() const { return element_indices.size(); }
    bool contains(std::size_t element_index) const;
};

// Subgroup generated by the given elements (indices into the group).
SubgroupDescriptor subgroup_closure(const WeylGroup& group,
                                    const std::vector<std::size_t>& generators);

// Elements fixing h, cross-checked against the subgroup generated by the
// reflections in roots vanishing at h.
SubgroupDescriptor stabilizer(const RootDatum& datum, const WeylGroup& group,
                              const RationalVector& h);

// Elements moving h by a lattice vector: {w : wh - h in L}.  The lattice
// basis must be invariant under the group (InvalidInput otherwise).
SubgroupDescriptor centralizer_mod_lattice(const RootDatum& datum, const WeylGroup& group,
                                           const RationalMatrix& lattice_basis,
                                           const RationalVector& h);

// Subgroup generated by the reflections of positive roots taking integer
// values on h (the crossings through h of the scaled diagram).
SubgroupDescriptor parallel_subgroup(const RootDatum& datum, const WeylGroup& group,
                                     const RationalVector& h);

bool is_subgroup_of(const SubgroupDescriptor& smaller, const SubgroupDescriptor& larger);
bool is_normal_in(const WeylGroup& group, const SubgroupDescriptor& smaller,
                  const SubgroupDescriptor& larger);

// |larger| / |smaller| with containment and divisibility asserted.
std::size_t quotient_size(const WeylGroup& group, const SubgroupDescriptor& larger,
                          const SubgroupDescriptor& smaller);

}  // namespace geocount
