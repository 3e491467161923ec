#include "hulls/serialize.hpp"

#include <stdexcept>

namespace hulls {
namespace {

json felt_to_json(const Felt& x) {
    if (x.is_zero()) return json("0");
    return json(x.log);
}

Felt felt_from_json(const FieldPtr& f, const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "0") throw std::invalid_argument("bad element literal");
        return Field::zero();
    }
    return f->element(j.get<std::uint64_t>());
}

std::string bool_cell(bool b) { return b ? "true" : "false"; }

std::string bounds_cell(const BoundsReport& b) {
    std::string out = b.b1_holds ? "pass" : "fail";
    out += b.b0_holds ? "/pass" : "/fail";
    out += !b.b2_applies ? "/na" : (b.b2_holds ? "/pass" : "/fail");
    return out;
}

}  // namespace

const char* distance_class_name(DistanceClass cls) {
    switch (cls) {
        case DistanceClass::kMds: return "MDS";
        case DistanceClass::kAmds: return "AMDS";
        case DistanceClass::kOther: return "other";
        case DistanceClass::kUnknown: return "unknown";
    }
    return "?";
}

const char* form_name(Form form) {
    return form == Form::kEuclidean ? "euclidean" : "hermitian";
}

json field_to_json(const Field& f) {
    return json{{"p", f.characteristic()},
                {"m", f.degree()},
                {"modulus", f.modulus()},
                {"theta", f.theta_encoding()}};
}

FieldPtr field_from_json(const json& j) {
    return Field::make_with(j.at("p").get<int>(), j.at("m").get<int>(),
                            j.at("modulus").get<std::vector<int>>(),
                            j.at("theta").get<std::uint32_t>());
}

json mat_to_json(const Mat& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        for (int jj = 0; jj < m.cols(); ++jj) entries.push_back(felt_to_json(m(i, jj)));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat mat_from_json(const FieldPtr& f, const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const json& entries = j.at("entries");
    if (rows < 0 || cols <= 0 || entries.size() != static_cast<std::size_t>(rows) * cols) {
        throw std::invalid_argument("matrix shape does not match its entry list");
    }
    Mat m(f, rows, cols);
    std::size_t idx = 0;
    for (int i = 0; i < rows; ++i) {
        for (int jj = 0; jj < cols; ++jj) m(i, jj) = felt_from_json(f, entries[idx++]);
    }
    return m;
}

json code_to_json(const LinearCode& code, std::uint64_t budget) {
    const DistanceReport rep = code.distance_class(budget);
    json summary{{"n", code.length()},
                 {"k", code.dimension()},
                 {"d_class", distance_class_name(rep.cls)},
                 {"hull_E", code.hull_dim(Form::kEuclidean)}};
    if (code.field()->is_quadratic()) {
        summary["hull_H"] = code.hull_dim(Form::kHermitian);
    } else {
        summary["hull_H"] = nullptr;
    }
    return json{{"field", field_to_json(*code.field())},
                {"gen", mat_to_json(code.generator())},
                {"summary", std::move(summary)}};
}

LinearCode code_from_json(const json& j) {
    const FieldPtr f = field_from_json(j.at("field"));
    return LinearCode(mat_from_json(f, j.at("gen")));
}

json eaqecc_to_json(const EaqeccParams& p, const BoundsReport& b) {
    return json{{"q", p.q},
                {"n", p.n},
                {"k", p.k},
                {"d", p.d},
                {"d_exact", p.d_exact},
                {"c", p.c},
                {"source_theorem", p.source_theorem},
                {"classical_recipe_id", p.classical_recipe},
                {"mds_eaqecc", p.mds},
                {"bounds", bounds_cell(b)}};
}

json sweep_to_json(const SweepTable& table) {
    json rows = json::array();
    for (const SweepRow& r : table.rows) {
        json row = eaqecc_to_json(r.params, r.bounds);
        row["item"] = r.item;
        row["dual_record"] = r.dual_record;
        row["classical_n"] = r.classical_n;
        row["classical_k"] = r.classical_k;
        row["hull"] = r.hull;
        row["classical_class"] = distance_class_name(r.classical_class);
        row["verified"] = r.verified;
        rows.push_back(std::move(row));
    }
    return json{{"theorem", q_theorem_name(table.theorem)},
                {"q", table.q},
                {"skipped", table.skipped},
                {"rows", std::move(rows)}};
}

std::string code_summary_csv_header() { return "n,k,d_class,hull_E,hull_H"; }

std::string code_summary_csv_row(const LinearCode& code, std::uint64_t budget) {
    const DistanceReport rep = code.distance_class(budget);
    std::string out = std::to_string(code.length()) + "," + std::to_string(code.dimension()) +
                      "," + distance_class_name(rep.cls) + "," +
                      std::to_string(code.hull_dim(Form::kEuclidean)) + ",";
    out += code.field()->is_quadratic() ? std::to_string(code.hull_dim(Form::kHermitian)) : "";
    return out;
}

std::string construction_csv_header() { return "theorem,q,n,k,d_class,form,hull,verified"; }

std::string construction_csv_row(const std::string& theorem, std::uint32_t q,
                                 const LinearCode& code, DistanceClass cls, Form form, int hull,
                                 bool verified) {
    return theorem + "," + std::to_string(q) + "," + std::to_string(code.length()) + "," +
           std::to_string(code.dimension()) + "," + distance_class_name(cls) + "," +
           form_name(form) + "," + std::to_string(hull) + "," + bool_cell(verified);
}

std::string eaqecc_csv_header() {
    return "q,n,k,d,d_exact,c,source_theorem,classical_recipe_id,mds_eaqecc,bounds";
}

std::string eaqecc_csv_row(const EaqeccParams& p, const BoundsReport& b) {
    return std::to_string(p.q) + "," + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
           std::to_string(p.d) + "," + bool_cell(p.d_exact) + "," + std::to_string(p.c) + "," +
           p.source_theorem + "," + p.classical_recipe + "," + bool_cell(p.mds) + "," +
           bounds_cell(b);
}

std::string sweep_to_csv(const SweepTable& table) {
    std::string out = eaqecc_csv_header() + "\n";
    for (const SweepRow& r : table.rows) out += eaqecc_csv_row(r.params, r.bounds) + "\n";
    return out;
}

}  // namespace hulls
