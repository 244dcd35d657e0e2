#pragma once

#include <nlohmann/json.hpp>

#include "geocount/geodesics.hpp"
#include "geocount/smith.hpp"

namespace geocount {

using ReportJson = nlohmann::ordered_json;

// JSON interchange: rationals as canonical strings, integer vectors as
// number arrays, field order fixed by insertion.

ReportJson vector_to_json(const RationalVector& v);
ReportJson int_vector_to_json(const IntVector& v);
ReportJson matrix_columns_to_json(const RationalMatrix& m);

ReportJson smith_to_json(const SmithDecomposition& d);
ReportJson descriptor_to_json(const FocalOrbitDescriptor& d);
ReportJson descriptors_to_json(const std::vector<FocalOrbitDescriptor>& ds);
ReportJson classification_to_json(const PointClassification& c);
ReportJson equivalents_to_json(const std::vector<RationalVector>& vs);
ReportJson simply_connected_to_json(const SimplyConnectedReport& r);
ReportJson describe_space(const Space& space);

}  // namespace geocount
