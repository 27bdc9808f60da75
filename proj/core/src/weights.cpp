#include "tensorshift/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

namespace tensorshift {

namespace {

void check_weight_value(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument(std::string(what) + " must be a finite nonnegative real");
    }
}

std::string real_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

WeightSequence WeightSequence::constant(double value) {
    return eventually_constant({}, value);
}

WeightSequence WeightSequence::eventually_constant(std::vector<double> prefix, double tail) {
    for (double v : prefix) check_weight_value(v, "weight");
    check_weight_value(tail, "tail weight");
    WeightSequence w;
    w.kind_ = Kind::EventuallyConstant;
    w.prefix_ = std::move(prefix);
    w.limit_ = tail;
    return w;
}

WeightSequence WeightSequence::bergman() {
    return parametric(Family::Bergman, 1.0, true, 0);
}

WeightSequence WeightSequence::dirichlet() {
    return parametric(Family::Dirichlet, 1.0, false, 0);
}

WeightSequence WeightSequence::parametric(Family family, double declared_limit,
                                          std::optional<bool> tail_increasing,
                                          long monotone_from) {
    check_weight_value(declared_limit, "declared limit");
    if (monotone_from < 0) throw std::invalid_argument("monotone_from must be >= 0");
    WeightSequence w;
    w.kind_ = Kind::Parametric;
    w.limit_ = declared_limit;
    w.family_ = family;
    w.tail_increasing_ = tail_increasing;
    w.monotone_from_ = monotone_from;
    return w;
}

double WeightSequence::at(long i) const {
    if (i < 0) return 0.0;
    if (kind_ == Kind::EventuallyConstant) {
        return i < static_cast<long>(prefix_.size()) ? prefix_[static_cast<size_t>(i)]
                                                     : limit_;
    }
    const double x = static_cast<double>(i);
    switch (family_) {
        case Family::Bergman:
            return std::sqrt((x + 1.0) / (x + 2.0));
        case Family::Dirichlet:
            return std::sqrt((x + 2.0) / (x + 1.0));
    }
    return limit_;
}

std::string WeightSequence::description() const {
    if (kind_ == Kind::Parametric) {
        return family_ == Family::Bergman ? "bergman" : "dirichlet";
    }
    if (prefix_.empty()) return "const:" + real_text(limit_);
    std::string s = "prefix:";
    for (size_t i = 0; i < prefix_.size(); ++i) {
        if (i > 0) s += ',';
        s += real_text(prefix_[i]);
    }
    s += ";tail:" + real_text(limit_);
    return s;
}

WeightSequence WeightSequence::scaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("scale factor must be a positive real");
    }
    if (kind_ != Kind::EventuallyConstant) {
        throw std::invalid_argument("scaled() supports EventuallyConstant sequences only");
    }
    std::vector<double> p = prefix_;
    for (double& v : p) v *= c;
    return eventually_constant(std::move(p), limit_ * c);
}

ExponentTuple::ExponentTuple(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || static_cast<int>(entries_.size()) > kMaxTupleLength) {
        throw std::invalid_argument("exponent tuple length must be between 1 and " +
                                    std::to_string(kMaxTupleLength));
    }
}

int ExponentTuple::signed_sum() const {
    int s = 0;
    for (int v : entries_) s += v;
    return s;
}

int ExponentTuple::abs_sum() const {
    int s = 0;
    for (int v : entries_) s += std::abs(v);
    return s;
}

int ExponentTuple::max_abs() const {
    int m = 0;
    for (int v : entries_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<int> ExponentTuple::multiplicity_profile() const {
    std::map<int, int> counts;
    for (int v : entries_) ++counts[v];
    std::vector<int> out;
    out.reserve(counts.size());
    for (const auto& [value, count] : counts) out.push_back(count);
    return out;
}

long long ExponentTuple::arrangement_count() const {
    long long num = 1;
    for (int i = 2; i <= size(); ++i) num *= i;
    for (int m : multiplicity_profile()) {
        long long f = 1;
        for (int i = 2; i <= m; ++i) f *= i;
        num /= f;
    }
    return num;
}

std::vector<std::vector<int>> ExponentTuple::distinct_arrangements() const {
    std::vector<int> v = entries_;
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

bool ExponentTuple::all_equal() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](int v) { return v == entries_.front(); });
}

double window_product(const WeightSequence& w, long i, long t) {
    if (t == 0) return 1.0;
    const long lo = t > 0 ? i : i + t;
    const long hi = t > 0 ? i + t - 1 : i - 1;
    double p = 1.0;
    for (long j = lo; j <= hi; ++j) p *= w.at(j);
    return p;
}

double window_min(const WeightSequence& w, long i, long t) {
    if (t == 0) return 1.0;
    const long lo = t > 0 ? i : i + t;
    const long hi = t > 0 ? i + t - 1 : i - 1;
    double m = std::numeric_limits<double>::infinity();
    for (long j = lo; j <= hi; ++j) m = std::min(m, w.at(j));
    return m;
}

RegularityDecision is_regular(const WeightSequence& w) {
    const double lam = w.limit();
    if (w.kind() == WeightSequence::Kind::EventuallyConstant) {
        const auto& p = w.prefix();
        for (size_t m = 0; m < p.size(); ++m) {
            if (p[m] > lam) return {false, static_cast<long>(m)};
        }
        return {true, std::nullopt};
    }
    if (!w.tail_increasing().has_value()) {
        throw std::invalid_argument(
            "parametric weight lacks a tail monotonicity declaration; regularity undecidable");
    }
    for (long m = 0; m < w.monotone_from(); ++m) {
        if (w.at(m) > lam) return {false, m};
    }
    if (*w.tail_increasing()) return {true, std::nullopt};
    // Decreasing tail: the first tail weight dominates all later ones.
    const long m0 = w.monotone_from();
    if (w.at(m0) > lam) return {false, m0};
    return {true, std::nullopt};
}

double power_norm(const WeightSequence& w, long l) {
    const long t = std::labs(l);
    if (t == 0) return 1.0;
    double best = std::pow(w.limit(), static_cast<double>(t));
    long scan_end;
    if (w.kind() == WeightSequence::Kind::EventuallyConstant) {
        scan_end = static_cast<long>(w.prefix().size());
    } else {
        if (!w.tail_increasing().has_value()) {
            throw std::invalid_argument(
                "parametric weight lacks a tail monotonicity declaration; norm undecidable");
        }
        scan_end = w.monotone_from() + t;
    }
    for (long i = 0; i <= scan_end; ++i) {
        best = std::max(best, window_product(w, i, t));
    }
    return best;
}

namespace {

double parse_real_token(const std::string& token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty()) {
        throw SpecParseError("invalid real number '" + token + "'", token);
    }
    return value;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) out.push_back(parse_real_token(token));
    if (out.empty()) throw SpecParseError("empty real list '" + text + "'", text);
    return out;
}

WeightSequence load_weight_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open weight file '" + path + "'", path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SpecParseError("weight file '" + path + "' is not valid JSON: " + e.what(), path);
    }
    if (!doc.is_object() || !doc.contains("prefix") || !doc.contains("tail") ||
        !doc["prefix"].is_array() || !doc["tail"].is_number()) {
        throw SpecParseError("weight file '" + path +
                                 "' must be {\"prefix\": [reals], \"tail\": real}",
                             path);
    }
    std::vector<double> prefix;
    for (const auto& v : doc["prefix"]) {
        if (!v.is_number()) {
            throw SpecParseError("weight file '" + path + "' has a non-numeric prefix entry",
                                 path);
        }
        prefix.push_back(v.get<double>());
    }
    return WeightSequence::eventually_constant(std::move(prefix), doc["tail"].get<double>());
}

}  // namespace

WeightSequence parse_weightspec(const std::string& spec) {
    if (spec == "bergman") return WeightSequence::bergman();
    if (spec.rfind("const:", 0) == 0) {
        return WeightSequence::constant(parse_real_token(spec.substr(6)));
    }
    if (spec.rfind("prefix:", 0) == 0) {
        const std::string rest = spec.substr(7);
        const auto sep = rest.find(";tail:");
        if (sep == std::string::npos) {
            throw SpecParseError("weightspec '" + spec + "' is missing ';tail:'", spec);
        }
        auto prefix = parse_real_list(rest.substr(0, sep));
        const double tail = parse_real_token(rest.substr(sep + 6));
        return WeightSequence::eventually_constant(std::move(prefix), tail);
    }
    if (spec.rfind("file:", 0) == 0) return load_weight_file(spec.substr(5));
    throw SpecParseError("unrecognized weightspec '" + spec + "'", spec);
}

std::vector<int> parse_exponent_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        int value = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || token.empty()) {
            throw SpecParseError("invalid exponent '" + token + "'", token);
        }
        out.push_back(value);
    }
    if (out.empty()) throw SpecParseError("empty exponent list '" + text + "'", text);
    return out;
}

}  // namespace tensorshift
