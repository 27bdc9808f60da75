#include "tensorshift/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace tensorshift::io {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

void write_value(std::ostream& out, const json& v, int depth) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(depth + 1) * 2, ' ');
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                if (!first) out << ",\n";
                first = false;
                out << pad_in << json(key).dump() << ": ";
                write_value(out, item, depth + 1);
            }
            out << "\n" << pad << "}";
            return;
        }
        case json::value_t::array: {
            if (v.empty()) {
                out << "[]";
                return;
            }
            out << "[\n";
            bool first = true;
            for (const auto& item : v) {
                if (!first) out << ",\n";
                first = false;
                out << pad_in;
                write_value(out, item, depth + 1);
            }
            out << "\n" << pad << "]";
            return;
        }
        case json::value_t::number_float:
            out << fmt12(v.get<double>());
            return;
        default:
            out << v.dump();
            return;
    }
}

}  // namespace

void write_json(std::ostream& out, const json& doc) {
    write_value(out, doc, 0);
    out << "\n";
}

std::string to_string(const json& doc) {
    std::ostringstream out;
    write_json(out, doc);
    return out.str();
}

json to_json(const NormProfile& p) {
    json doc;
    doc["type"] = "norm_profile";
    doc["symmetry"] = p.symmetry == Symmetry::Symmetric ? "sym" : "antisym";
    doc["exponents"] = p.exponents;
    doc["weights"] = p.weight_desc;
    doc["tol"] = p.tol;
    doc["max_norm"] = p.max_norm;
    doc["argmax_k"] = p.argmax_k;
    doc["product_of_power_norms"] = p.product_of_power_norms;
    doc["limit_prediction"] = p.limit_prediction;
    json rows = json::array();
    for (const auto& r : p.rows) {
        rows.push_back({{"k", r.k},
                        {"dim_src", r.dim_src},
                        {"dim_tgt", r.dim_tgt},
                        {"norm", r.norm},
                        {"iters", r.iterations}});
    }
    doc["rows"] = std::move(rows);
    return doc;
}

NormProfile profile_from_json(const json& doc) {
    NormProfile p;
    p.symmetry = doc.at("symmetry").get<std::string>() == "sym" ? Symmetry::Symmetric
                                                                : Symmetry::Antisymmetric;
    p.exponents = doc.at("exponents").get<std::vector<int>>();
    p.weight_desc = doc.at("weights").get<std::string>();
    p.tol = doc.at("tol").get<double>();
    p.max_norm = doc.at("max_norm").get<double>();
    p.argmax_k = doc.at("argmax_k").get<int>();
    p.product_of_power_norms = doc.at("product_of_power_norms").get<double>();
    p.limit_prediction = doc.at("limit_prediction").get<double>();
    for (const auto& r : doc.at("rows")) {
        p.rows.push_back({r.at("k").get<int>(), r.at("dim_src").get<int>(),
                          r.at("dim_tgt").get<int>(), r.at("norm").get<double>(),
                          r.at("iters").get<int>()});
    }
    return p;
}

std::string to_csv(const NormProfile& p) {
    std::string out = "k,dim_src,dim_tgt,norm,iters\n";
    for (const auto& r : p.rows) {
        out += std::to_string(r.k) + ',' + std::to_string(r.dim_src) + ',' +
               std::to_string(r.dim_tgt) + ',' + fmt12(r.norm) + ',' +
               std::to_string(r.iterations) + '\n';
    }
    return out;
}

json to_json(const CensusReport& r) {
    json doc;
    doc["type"] = "census";
    doc["family"] = r.antisymmetric ? "antisym" : "sym";
    doc["n"] = r.n;
    doc["exponents"] = r.exponents;
    if (r.antisymmetric) doc["offset"] = r.offset;
    doc["k_lo"] = r.k_lo;
    doc["k_hi"] = r.k_hi;
    doc["epsilon"] = r.epsilon;
    doc["weights"] = r.weight_desc;
    json rows = json::array();
    if (!r.antisymmetric) {
        for (const auto& row : r.rows) {
            rows.push_back({{"k", row.k},
                            {"target_degree", row.target_degree},
                            {"P", row.source_partition_count},
                            {"P_target", row.target_partition_count},
                            {"A", row.deficient_count},
                            {"E", row.preimage_histogram},
                            {"A_tilde", row.a_tilde},
                            {"A_check", row.a_check},
                            {"flat_ratio", row.flat_ratio},
                            {"deficient_ratio", row.deficient_ratio}});
        }
    } else {
        for (const auto& row : r.antisym_rows) {
            rows.push_back({{"k", row.k},
                            {"target_degree", row.target_degree},
                            {"W", row.strict_count},
                            {"W_spread", row.spread_count},
                            {"W_box", row.box_count},
                            {"E", row.preimage_histogram},
                            {"A_tilde_prime", row.a_tilde_prime},
                            {"flat_ratio", row.flat_ratio},
                            {"box_excess_ratio", row.box_excess_ratio}});
        }
    }
    doc["rows"] = std::move(rows);
    return doc;
}

CensusReport census_from_json(const json& doc) {
    CensusReport r;
    r.antisymmetric = doc.at("family").get<std::string>() == "antisym";
    r.n = doc.at("n").get<int>();
    r.exponents = doc.at("exponents").get<std::vector<int>>();
    if (r.antisymmetric) r.offset = doc.at("offset").get<int>();
    r.k_lo = doc.at("k_lo").get<int>();
    r.k_hi = doc.at("k_hi").get<int>();
    r.epsilon = doc.at("epsilon").get<double>();
    r.weight_desc = doc.at("weights").get<std::string>();
    for (const auto& row : doc.at("rows")) {
        if (!r.antisymmetric) {
            CensusRow c;
            c.k = row.at("k").get<int>();
            c.target_degree = row.at("target_degree").get<int>();
            c.source_partition_count = row.at("P").get<long long>();
            c.target_partition_count = row.at("P_target").get<long long>();
            c.deficient_count = row.at("A").get<long long>();
            c.preimage_histogram = row.at("E").get<std::vector<long long>>();
            c.a_tilde = row.at("A_tilde").get<long long>();
            c.a_check = row.at("A_check").get<long long>();
            c.flat_ratio = row.at("flat_ratio").get<double>();
            c.deficient_ratio = row.at("deficient_ratio").get<double>();
            r.rows.push_back(std::move(c));
        } else {
            AntisymCensusRow c;
            c.k = row.at("k").get<int>();
            c.target_degree = row.at("target_degree").get<int>();
            c.strict_count = row.at("W").get<long long>();
            c.spread_count = row.at("W_spread").get<long long>();
            c.box_count = row.at("W_box").get<long long>();
            c.preimage_histogram = row.at("E").get<std::vector<long long>>();
            c.a_tilde_prime = row.at("A_tilde_prime").get<long long>();
            c.flat_ratio = row.at("flat_ratio").get<double>();
            c.box_excess_ratio = row.at("box_excess_ratio").get<double>();
            r.antisym_rows.push_back(std::move(c));
        }
    }
    return r;
}

std::string to_csv(const CensusReport& r) {
    std::string out;
    const size_t buckets =
        r.antisymmetric ? (r.antisym_rows.empty() ? 0 : r.antisym_rows.front().preimage_histogram.size())
                        : (r.rows.empty() ? 0 : r.rows.front().preimage_histogram.size());
    if (!r.antisymmetric) {
        out = "k,P,A";
        for (size_t m = 0; m < buckets; ++m) out += ",E_" + std::to_string(m);
        out += ",A_tilde,A_check,flat_ratio,deficient_ratio\n";
        for (const auto& row : r.rows) {
            out += std::to_string(row.k) + ',' + std::to_string(row.source_partition_count) +
                   ',' + std::to_string(row.deficient_count);
            for (long long e : row.preimage_histogram) out += ',' + std::to_string(e);
            out += ',' + std::to_string(row.a_tilde) + ',' + std::to_string(row.a_check) + ',' +
                   fmt12(row.flat_ratio) + ',' + fmt12(row.deficient_ratio) + '\n';
        }
    } else {
        out = "k,W,W_spread,W_box";
        for (size_t m = 0; m < buckets; ++m) out += ",E_" + std::to_string(m);
        out += ",A_tilde_prime,flat_ratio,box_excess_ratio\n";
        for (const auto& row : r.antisym_rows) {
            out += std::to_string(row.k) + ',' + std::to_string(row.strict_count) + ',' +
                   std::to_string(row.spread_count) + ',' + std::to_string(row.box_count);
            for (long long e : row.preimage_histogram) out += ',' + std::to_string(e);
            out += ',' + std::to_string(row.a_tilde_prime) + ',' + fmt12(row.flat_ratio) + ',' +
                   fmt12(row.box_excess_ratio) + '\n';
        }
    }
    return out;
}

namespace {

std::string verdict_text(Verdict v) {
    switch (v) {
        case Verdict::Pass:
            return "pass";
        case Verdict::Fail:
            return "fail";
        case Verdict::NotApplicable:
            return "not_applicable";
    }
    return "fail";
}

Verdict verdict_from_text(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "not_applicable") return Verdict::NotApplicable;
    return Verdict::Fail;
}

}  // namespace

json to_json(const VerificationReport& r) {
    json doc;
    doc["type"] = "verification";
    doc["scenario"] = r.scenario;
    json inputs;
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    doc["inputs"] = std::move(inputs);
    json quantities;
    for (const auto& [k, v] : r.quantities) quantities[k] = v;
    doc["quantities"] = std::move(quantities);
    json assertions = json::array();
    for (const auto& a : r.assertions) {
        assertions.push_back({{"name", a.name},
                              {"verdict", verdict_text(a.verdict)},
                              {"lhs", a.lhs},
                              {"rhs", a.rhs},
                              {"detail", a.detail}});
    }
    doc["assertions"] = std::move(assertions);
    doc["all_passed"] = r.all_passed();
    return doc;
}

VerificationReport verification_from_json(const json& doc) {
    VerificationReport r;
    r.scenario = doc.at("scenario").get<std::string>();
    for (const auto& [k, v] : doc.at("inputs").items()) {
        r.inputs.emplace_back(k, v.get<std::string>());
    }
    for (const auto& [k, v] : doc.at("quantities").items()) {
        r.quantities.emplace_back(k, v.get<double>());
    }
    for (const auto& a : doc.at("assertions")) {
        r.assertions.push_back({a.at("name").get<std::string>(),
                                verdict_from_text(a.at("verdict").get<std::string>()),
                                a.at("lhs").get<double>(), a.at("rhs").get<double>(),
                                a.at("detail").get<std::string>()});
    }
    return r;
}

GoldenResult golden_check(const std::string& dir, const std::string& name,
                          const std::vector<std::pair<std::string, double>>& quantities,
                          double tol) {
    namespace fs = std::filesystem;
    GoldenResult result;
    fs::create_directories(dir);
    const fs::path file = fs::path(dir) / (name + ".json");
    if (!fs::exists(file)) {
        json doc;
        doc["name"] = name;
        json q;
        for (const auto& [k, v] : quantities) q[k] = v;
        doc["quantities"] = std::move(q);
        std::ofstream out(file);
        write_json(out, doc);
        result.written = true;
        result.matched = true;
        result.detail = "baseline written to " + file.string();
        return result;
    }
    std::ifstream in(file);
    json doc = json::parse(in);
    const auto& stored = doc.at("quantities");
    result.matched = true;
    for (const auto& [k, v] : quantities) {
        if (!stored.contains(k)) {
            result.matched = false;
            result.detail += "missing key " + k + "; ";
            continue;
        }
        const double want = stored.at(k).get<double>();
        if (!(std::abs(want - v) <= tol)) {
            result.matched = false;
            result.detail += k + ": got " + fmt12(v) + " want " + fmt12(want) + "; ";
        }
    }
    if (result.matched) result.detail = "baseline matched: " + file.string();
    return result;
}

}  // namespace tensorshift::io
