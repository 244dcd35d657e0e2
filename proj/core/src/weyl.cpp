#include "geocount/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "geocount/enumeration.hpp"
#include "geocount/errors.hpp"

namespace geocount {

std::size_t WeylGroup::index_of(const RationalMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw NotFound("matrix is not a group element");
    return it->second;
}

bool WeylGroup::contains(const RationalMatrix& m) const { return index_.count(m) > 0; }

std::size_t WeylGroup::multiply(std::size_t i, std::size_t j) const {
    return index_of(elements_[i].matrix.mul(elements_[j].matrix));
}

std::size_t WeylGroup::inverse(std::size_t i) const {
    return index_of(elements_[i].matrix.inverse());
}

RationalVector WeylGroup::action(std::size_t i, const RationalVector& h) const {
    return elements_[i].matrix.apply(h);
}

RationalMatrix reflection_matrix(const RootDatum& datum, std::size_t root_index) {
    const std::size_t r = datum.rank;
    const RationalVector coroot = datum.coroot(root_index);
    RationalMatrix m = RationalMatrix::identity(r);
    for (std::size_t j = 0; j < r; ++j) {
        // a(e_j) is the j-th entry of G H_a.
        Rational aj;
        for (std::size_t i = 0; i < r; ++i)
            aj += datum.gram.at(j, i) * datum.roots[root_index].covector[i];
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) -= aj * coroot[i];
    }
    return m;
}

namespace {

void check_element(const RootDatum& datum, const RationalMatrix& w) {
    const RationalMatrix wt = w.transpose();
    if (!(wt.mul(datum.gram).mul(w) == datum.gram))
        throw InternalInvariantViolation("group element does not preserve the gram form");
    for (const auto& root : datum.roots) {
        const RationalVector image = w.apply(root.covector);
        auto it = datum.index_by_covector.find(image);
        if (it == datum.index_by_covector.end() ||
            datum.roots[it->second].multiplicity != root.multiplicity)
            throw InternalInvariantViolation("group element does not permute the roots");
    }
}

}  // namespace

WeylGroup enumerate_weyl_group(const RootDatum& datum, std::uint64_t max_order) {
    WeylGroup group;
    std::vector<RationalMatrix> generators;
    for (std::size_t s : datum.simple_indices)
        generators.push_back(reflection_matrix(datum, s));

    const RationalMatrix id = RationalMatrix::identity(datum.rank);
    group.elements_.push_back({id, {}});
    group.index_[id] = 0;

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < generators.size(); ++g) {
            const RationalMatrix next = group.elements_[cur].matrix.mul(generators[g]);
            if (group.index_.count(next)) continue;
            if (group.elements_.size() >= max_order)
                throw GroupTooLarge("group enumeration exceeded the element cap",
                                    group.elements_.size());
            check_element(datum, next);
            std::vector<std::size_t> word = group.elements_[cur].word;
            word.push_back(g);
            group.index_[next] = group.elements_.size();
            group.elements_.push_back({next, std::move(word)});
            queue.push_back(group.elements_.size() - 1);
        }
    }
    return group;
}

bool SubgroupDescriptor::contains(std::size_t element_index) const {
    return std::binary_search(element_indices.begin(), element_indices.end(), element_index);
}

SubgroupDescriptor subgroup_closure(const WeylGroup& group,
                                    const std::vector<std::size_t>& generators) {
    std::set<std::size_t> seen{0};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t g : generators) {
            const std::size_t next = group.multiply(cur, g);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    SubgroupDescriptor out;
    out.element_indices.assign(seen.begin(), seen.end());
    out.generator_indices = generators;
    std::sort(out.generator_indices.begin(), out.generator_indices.end());
    out.generator_indices.erase(
        std::unique(out.generator_indices.begin(), out.generator_indices.end()),
        out.generator_indices.end());
    return out;
}

SubgroupDescriptor stabilizer(const RootDatum& datum, const WeylGroup& group,
                              const RationalVector& h) {
    std::vector<std::size_t> fixing;
    for (std::size_t i = 0; i < group.size(); ++i)
        if (group.action(i, h) == h) fixing.push_back(i);

    std::vector<std::size_t> reflection_gens;
    for (std::size_t i : datum.positive_indices)
        if (datum.root_value(i, h).is_zero())
            reflection_gens.push_back(group.index_of(reflection_matrix(datum, i)));

    SubgroupDescriptor generated = subgroup_closure(group, reflection_gens);
    if (generated.element_indices != fixing)
        throw InternalInvariantViolation(
            "stabilizer is not generated by the reflections fixing the point");
    return generated;
}

SubgroupDescriptor centralizer_mod_lattice(const RootDatum& datum, const WeylGroup& group,
                                           const RationalMatrix& lattice_basis,
                                           const RationalVector& h) {
    (void)datum;
    // The defining set is a subgroup only when the lattice is group
    // invariant; check invariance on the basis once.
    for (std::size_t i = 1; i < group.size(); ++i) {
        if (group.element(i).word.size() != 1) continue;
        for (std::size_t j = 0; j < lattice_basis.cols(); ++j)
            if (!solve_in_lattice(lattice_basis, group.action(i, lattice_basis.column(j))))
                throw InvalidInput("lattice is not invariant under the group");
    }

    SubgroupDescriptor out;
    for (std::size_t i = 0; i < group.size(); ++i) {
        const RationalVector diff = vec_sub(group.action(i, h), h);
        if (solve_in_lattice(lattice_basis, diff)) out.element_indices.push_back(i);
    }

    // Closure cross-check; guaranteed by invariance, so failure is a bug.
    for (std::size_t a : out.element_indices)
        for (std::size_t b : out.element_indices)
            if (!std::binary_search(out.element_indices.begin(), out.element_indices.end(),
                                    group.multiply(a, b)))
                throw InternalInvariantViolation("lattice centralizer is not closed");
    return out;
}

SubgroupDescriptor parallel_subgroup(const RootDatum& datum, const WeylGroup& group,
                                     const RationalVector& h) {
    std::vector<std::size_t> gens;
    for (std::size_t i : datum.positive_indices)
        if (datum.root_value(i, h).is_integer())
            gens.push_back(group.index_of(reflection_matrix(datum, i)));
    return subgroup_closure(group, gens);
}

bool is_subgroup_of(const SubgroupDescriptor& smaller, const SubgroupDescriptor& larger) {
    return std::includes(larger.element_indices.begin(), larger.element_indices.end(),
                         smaller.element_indices.begin(), smaller.element_indices.end());
}

bool is_normal_in(const WeylGroup& group, const SubgroupDescriptor& smaller,
                  const SubgroupDescriptor& larger) {
    for (std::size_t w : larger.element_indices) {
        const std::size_t w_inv = group.inverse(w);
        for (std::size_t s : smaller.element_indices) {
            const std::size_t conj = group.multiply(group.multiply(w, s), w_inv);
            if (!smaller.contains(conj)) return false;
        }
    }
    return true;
}

std::size_t quotient_size(const WeylGroup& group, const SubgroupDescriptor& larger,
                          const SubgroupDescriptor& smaller) {
    (void)group;
    if (!is_subgroup_of(smaller, larger))
        throw InternalInvariantViolation("quotient of non-nested subgroups");
    if (smaller.order() == 0 || larger.order() % smaller.order() != 0)
        throw InternalInvariantViolation("subgroup order does not divide the group order");
    return larger.order() / smaller.order();
}

}  // namespace geocount
