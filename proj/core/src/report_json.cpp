#include "geocount/report_json.hpp"

#include "geocount/lattice.hpp"

namespace geocount {

namespace {

ReportJson integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
    return n.get_str();
}

}  // namespace

ReportJson vector_to_json(const RationalVector& v) {
    ReportJson out = ReportJson::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

ReportJson int_vector_to_json(const IntVector& v) {
    ReportJson out = ReportJson::array();
    for (const auto& x : v) out.push_back(integer_to_json(x));
    return out;
}

ReportJson matrix_columns_to_json(const RationalMatrix& m) {
    ReportJson out = ReportJson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(vector_to_json(m.column(j)));
    return out;
}

ReportJson smith_to_json(const SmithDecomposition& d) {
    ReportJson out;
    out["invariant_factors"] = ReportJson::array();
    for (const auto& f : d.invariant_factors) out["invariant_factors"].push_back(integer_to_json(f));
    out["free_rank"] = d.free_rank;
    return out;
}

ReportJson descriptor_to_json(const FocalOrbitDescriptor& d) {
    ReportJson out;
    out["representative"] = vector_to_json(d.representative);
    out["norm_squared"] = d.norm_squared.str();
    out["dimension"] = d.dimension;
    out["components"] = d.component_count;
    ReportJson torus = ReportJson::array();
    for (const auto& v : d.torus_intersection) torus.push_back(vector_to_json(v));
    out["torus_intersection"] = torus;
    out["homotopy_label"] = int_vector_to_json(d.homotopy_label);
    return out;
}

ReportJson descriptors_to_json(const std::vector<FocalOrbitDescriptor>& ds) {
    ReportJson out = ReportJson::array();
    for (const auto& d : ds) out.push_back(descriptor_to_json(d));
    return out;
}

ReportJson classification_to_json(const PointClassification& c) {
    ReportJson out;
    out["regularity"] = c.regular ? "regular" : "singular";
    out["cut"] = cut_position_name(c.cut);
    out["conjugate"] = conjugate_position_name(c.conjugate);
    out["index"] = c.index;
    return out;
}

ReportJson equivalents_to_json(const std::vector<RationalVector>& vs) {
    ReportJson out = ReportJson::array();
    for (const auto& v : vs) out.push_back(vector_to_json(v));
    return out;
}

ReportJson simply_connected_to_json(const SimplyConnectedReport& r) {
    ReportJson out;
    out["gamma_equals_gamma0"] = r.gamma_equals_gamma0;
    out["pi1_trivial"] = r.pi1_trivial;
    out["alcove_checked"] = r.alcove_checked;
    if (r.alcove_checked) {
        out["alcove_samples"] = r.alcove.checked;
        out["alcove_matches"] = r.alcove.all_match;
        ReportJson mism = ReportJson::array();
        for (const auto& v : r.alcove.mismatches) mism.push_back(vector_to_json(v));
        out["alcove_mismatches"] = mism;
    }
    out["consistent"] = r.consistent;
    return out;
}

ReportJson describe_space(const Space& space) {
    const RootDatum& datum = space.datum();
    ReportJson out;
    out["name"] = space.name();
    out["rank"] = datum.rank;

    ReportJson gram = ReportJson::array();
    for (std::size_t i = 0; i < datum.gram.rows(); ++i) {
        ReportJson row = ReportJson::array();
        for (std::size_t j = 0; j < datum.gram.cols(); ++j) row.push_back(datum.gram.at(i, j).str());
        gram.push_back(row);
    }
    out["gram"] = gram;

    ReportJson roots = ReportJson::array();
    for (std::size_t i : datum.positive_indices) {
        ReportJson r;
        r["covector"] = vector_to_json(datum.roots[i].covector);
        r["multiplicity"] = datum.roots[i].multiplicity;
        r["coroot"] = vector_to_json(datum.coroot(i));
        roots.push_back(r);
    }
    out["positive_roots"] = roots;

    ReportJson simple = ReportJson::array();
    for (std::size_t i : datum.simple_indices)
        simple.push_back(vector_to_json(datum.roots[i].covector));
    out["simple_roots"] = simple;

    out["weyl_order"] = space.weyl().size();
    out["lattice"] = matrix_columns_to_json(space.gamma());
    out["coroot_lattice"] = matrix_columns_to_json(space.gamma0());

    const CentralLatticeResult central = central_lattice(datum);
    ReportJson central_json;
    central_json["discrete"] = central.discrete;
    central_json["generators"] = matrix_columns_to_json(central.basis);
    out["central_lattice"] = central_json;

    const UnitLatticeReport validation =
        validate_unit_lattice(datum, space.weyl(), space.gamma());
    ReportJson vjson;
    vjson["ok"] = validation.ok;
    vjson["failures"] = validation.failures;
    out["validation"] = vjson;

    out["fundamental_group"] = smith_to_json(space.fundamental_group());
    out["simply_connected"] = simply_connected_to_json(space.simply_connected_report());
    if (!space.notes().empty()) out["notes"] = space.notes();
    return out;
}

}  // namespace geocount
