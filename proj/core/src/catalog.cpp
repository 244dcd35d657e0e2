#include "geocount/catalog.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "geocount/errors.hpp"
#include "geocount/lattice.hpp"

namespace geocount {

namespace {

using json = nlohmann::ordered_json;

RationalMatrix identity_lattice(std::size_t n) { return RationalMatrix::identity(n); }

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

SpaceDescription sphere_like(const std::string& name, int multiplicity, const Rational& period,
                             const std::string& notes) {
    SpaceDescription d;
    d.name = name;
    d.rank = 1;
    d.gram = identity_lattice(1);
    d.roots = {{rv({Rational(1)}), multiplicity}};
    RationalMatrix lat(1, 1);
    lat.at(0, 0) = period;
    d.lattice = lat;
    d.notes = notes;
    return d;
}

SpaceDescription grassmannian_44(const std::string& name, bool oriented) {
    SpaceDescription d;
    d.name = name;
    d.rank = 2;
    d.gram = identity_lattice(2);
    d.roots = {{rv({Rational(1), Rational(-1)}), 1}, {rv({Rational(1), Rational(1)}), 1}};
    if (oriented) {
        RationalMatrix lat(2, 2);
        lat.at(0, 0) = Rational(1);
        lat.at(1, 0) = Rational(-1);
        lat.at(0, 1) = Rational(1);
        lat.at(1, 1) = Rational(1);
        d.lattice = lat;
        d.notes = "oriented two-planes in R^4; unit lattice equals the coroot span";
    } else {
        d.lattice = identity_lattice(2);
        d.notes = "two-planes in R^4; angle coordinates on the standard maximal flat";
    }
    return d;
}

SpaceDescription torus_preset(std::size_t n) {
    SpaceDescription d;
    d.name = "T" + std::to_string(n);
    d.rank = n;
    d.gram = identity_lattice(n);
    d.lattice = identity_lattice(n);
    d.notes = "flat torus R^n / (pi Z)^n in scaled coordinates; no roots";
    return d;
}

SpaceDescription grassmannian_2n(std::size_t n) {
    SpaceDescription d;
    d.name = "Gr2Rn:" + std::to_string(n);
    d.rank = 2;
    d.gram = identity_lattice(2);
    d.roots = {{rv({Rational(1), Rational(-1)}), 1},
               {rv({Rational(1), Rational(1)}), 1},
               {rv({Rational(0), Rational(1)}), static_cast<int>(n) - 4},
               {rv({Rational(1), Rational(0)}), static_cast<int>(n) - 4}};
    d.lattice = identity_lattice(2);
    d.notes = "two-planes in R^n for n >= 5; short root multiplicities grow with n; "
              "lattice data provisional pending an independent check of the unit lattice";
    return d;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"S2", "RP2", "Gr2R4", "Gr2R4+", "SU2-group", "T1", "T2", "T3",
            "T4", "T5", "T6", "T7", "T8"};
}

SpaceDescription preset(const std::string& name) {
    if (name == "S2")
        return sphere_like("S2", 1, Rational(2),
                           "round two-sphere; the flat is a great circle traversed once per "
                           "unit lattice step");
    if (name == "RP2")
        return sphere_like("RP2", 1, Rational(1),
                           "real projective plane; antipodal quotient halves the translation "
                           "lattice of the sphere");
    if (name == "Gr2R4") return grassmannian_44("Gr2R4", false);
    if (name == "Gr2R4+") return grassmannian_44("Gr2R4+", true);
    if (name == "SU2-group")
        return sphere_like("SU2-group", 2,
                           Rational(2),
                           "SU(2) as a symmetric space of the doubled group; the standard "
                           "identification folds tangent pairs onto the diagonal and doubles "
                           "the flat coordinate, so callers pass H/2 when comparing against "
                           "group-side conventions");
    if (name.size() == 2 && name[0] == 'T' && name[1] >= '1' && name[1] <= '8')
        return torus_preset(static_cast<std::size_t>(name[1] - '0'));
    if (name.rfind("Gr2Rn:", 0) == 0) {
        const std::string arg = name.substr(6);
        std::size_t n = 0;
        try {
            n = std::stoul(arg);
        } catch (...) {
            throw NotFound("malformed grassmannian preset '" + name + "'");
        }
        if (n < 5) throw NotFound("Gr2Rn requires n >= 5");
        if (n > 64) throw NotFound("Gr2Rn preset capped at n = 64");
        return grassmannian_2n(n);
    }
    throw NotFound("unknown preset '" + name + "'");
}

namespace {

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return Rational::from_string(j.get<std::string>());
        } catch (const InvalidInput& e) {
            throw InvalidInput(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw InvalidInput(where + ": expected a rational string or integer");
}

RationalVector vector_from_json(const json& j, std::size_t rank, const std::string& where) {
    if (!j.is_array()) throw InvalidInput(where + ": expected an array");
    if (j.size() != rank)
        throw InvalidInput(where + ": expected " + std::to_string(rank) + " entries");
    RationalVector out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

SpaceDescription space_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidInput("space description must be a JSON object");

    SpaceDescription d;
    if (!j.contains("name") || !j["name"].is_string())
        throw InvalidInput("name: expected a string");
    d.name = j["name"].get<std::string>();

    if (!j.contains("rank") || !j["rank"].is_number_integer() || j["rank"].get<long long>() < 0)
        throw InvalidInput("rank: expected a nonnegative integer");
    d.rank = j["rank"].get<std::size_t>();

    if (!j.contains("gram") || !j["gram"].is_array() || j["gram"].size() != d.rank)
        throw InvalidInput("gram: expected an array of " + std::to_string(d.rank) + " rows");
    d.gram = RationalMatrix(d.rank, d.rank);
    for (std::size_t i = 0; i < d.rank; ++i) {
        const RationalVector row =
            vector_from_json(j["gram"][i], d.rank, "gram[" + std::to_string(i) + "]");
        for (std::size_t k = 0; k < d.rank; ++k) d.gram.at(i, k) = row[k];
    }

    if (j.contains("roots")) {
        if (!j["roots"].is_array()) throw InvalidInput("roots: expected an array");
        for (std::size_t i = 0; i < j["roots"].size(); ++i) {
            const json& r = j["roots"][i];
            const std::string where = "roots[" + std::to_string(i) + "]";
            if (!r.is_object()) throw InvalidInput(where + ": expected an object");
            if (!r.contains("covector"))
                throw InvalidInput(where + ".covector: missing");
            if (!r.contains("multiplicity") || !r["multiplicity"].is_number_integer())
                throw InvalidInput(where + ".multiplicity: expected an integer");
            Root root;
            root.covector = vector_from_json(r["covector"], d.rank, where + ".covector");
            root.multiplicity = r["multiplicity"].get<int>();
            d.roots.push_back(root);
        }
    }

    if (j.contains("lattice")) {
        if (!j["lattice"].is_array()) throw InvalidInput("lattice: expected an array");
        std::vector<RationalVector> generators;
        for (std::size_t i = 0; i < j["lattice"].size(); ++i)
            generators.push_back(vector_from_json(j["lattice"][i], d.rank,
                                                  "lattice[" + std::to_string(i) + "]"));
        d.lattice = RationalMatrix::from_columns(generators);
        if (generators.empty()) d.lattice = RationalMatrix(d.rank, 0);
    }

    if (j.contains("notes")) {
        if (!j["notes"].is_string()) throw InvalidInput("notes: expected a string");
        d.notes = j["notes"].get<std::string>();
    }
    return d;
}

SpaceDescription space_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open space file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return space_from_json_text(buffer.str());
}

std::string space_to_json_text(const SpaceDescription& d) {
    nlohmann::ordered_json j;
    j["name"] = d.name;
    j["rank"] = d.rank;
    j["gram"] = json::array();
    for (std::size_t i = 0; i < d.gram.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < d.gram.cols(); ++k) row.push_back(d.gram.at(i, k).str());
        j["gram"].push_back(row);
    }
    j["roots"] = json::array();
    for (const auto& r : d.roots) {
        nlohmann::ordered_json root;
        root["covector"] = json::array();
        for (const auto& x : r.covector) root["covector"].push_back(x.str());
        root["multiplicity"] = r.multiplicity;
        j["roots"].push_back(root);
    }
    if (d.lattice) {
        j["lattice"] = json::array();
        for (std::size_t c = 0; c < d.lattice->cols(); ++c) {
            json gen = json::array();
            for (std::size_t i = 0; i < d.lattice->rows(); ++i)
                gen.push_back(d.lattice->at(i, c).str());
            j["lattice"].push_back(gen);
        }
    }
    if (!d.notes.empty()) j["notes"] = d.notes;
    return j.dump(2) + "\n";
}

Space build_space(const SpaceDescription& description, std::uint64_t weyl_cap) {
    const RootDatum datum = build_root_datum(description.rank, description.gram,
                                             description.roots);
    const RationalMatrix gamma =
        description.lattice ? *description.lattice : fundamental_lattice(datum);
    return Space(description.name, datum, gamma, description.notes, weyl_cap);
}

}  // namespace geocount
