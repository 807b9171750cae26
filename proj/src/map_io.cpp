#include "corput/map_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "corput/errors.hpp"

namespace corput {

namespace {

// Minimal recursive-descent parser: expr := term (('+'|'-') term)*,
// term := factor (('*'|'/') factor)*, factor := number | const | (expr) | -factor.
class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    double parse() {
        double v = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw UsageError("trailing characters in expression: " + s_);
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    double expr() {
        double v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    double term() {
        double v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/')) {
                double d = factor();
                if (d == 0.0)
                    throw UsageError("division by zero in expression");
                v /= d;
            } else
                return v;
        }
    }
    double factor() {
        skip_ws();
        if (eat('(')) {
            double v = expr();
            if (!eat(')'))
                throw UsageError("missing ')' in expression");
            return v;
        }
        if (eat('-'))
            return -factor();
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
            std::size_t end = pos_;
            while (end < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '.' ||
                    s_[end] == 'e' || s_[end] == 'E' ||
                    ((s_[end] == '+' || s_[end] == '-') && (s_[end - 1] == 'e' || s_[end - 1] == 'E'))))
                ++end;
            double v = std::stod(s_.substr(pos_, end - pos_));
            pos_ = end;
            return v;
        }
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t end = pos_;
            while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end])))
                ++end;
            std::string name = s_.substr(pos_, end - pos_);
            pos_ = end;
            if (name == "phi")
                return (1.0 + std::sqrt(5.0)) / 2.0;
            if (name == "sqrt2")
                return std::sqrt(2.0);
            throw UsageError("unknown constant '" + name + "' (know: phi, sqrt2)");
        }
        throw UsageError("malformed expression: " + s_);
    }
};

double number_field(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key))
        throw UsageError("branch is missing field '" + key + "'");
    const auto& v = j.at(key);
    if (v.is_number())
        return v.get<double>();
    if (v.is_string())
        return parse_expr(v.get<std::string>());
    throw UsageError("field '" + key + "' must be a number or an expression string");
}

} // namespace

double parse_expr(const std::string& text) {
    return ExprParser(text).parse();
}

PLMap load_map_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("map file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("branches") || !j.at("branches").is_array())
        throw UsageError("map file needs an object with a 'branches' array");
    std::vector<Branch> branches;
    for (const auto& bj : j.at("branches")) {
        Branch b;
        b.left = number_field(bj, "left");
        b.right = number_field(bj, "right");
        b.sign = static_cast<int>(number_field(bj, "sign"));
        b.slope = number_field(bj, "slope");
        b.image_left = number_field(bj, "image_left");
        b.image_right = number_field(bj, "image_right");
        branches.push_back(b);
    }
    std::string name = j.value("name", std::string("map"));
    return PLMap::validated(std::move(branches), name);
}

PLMap load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open map file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_map_json(ss.str());
}

std::uint64_t map_hash(const PLMap& map) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](const char* buf, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
    };
    char buf[512];
    for (const Branch& b : map.branches()) {
        int len = std::snprintf(buf, sizeof(buf), "%.17g:%.17g:%d:%.17g:%.17g:%.17g;", b.left,
                                b.right, b.sign, b.slope, b.image_left, b.image_right);
        mix(buf, static_cast<std::size_t>(len));
    }
    return h;
}

PLMap doubling_map() {
    return PLMap::validated({{0.0, 0.5, +1, 2.0, 0.0, 1.0}, {0.5, 1.0, +1, 2.0, 0.0, 1.0}},
                            "doubling");
}

PLMap tent_map() {
    return PLMap::validated({{0.0, 0.5, +1, 2.0, 0.0, 1.0}, {0.5, 1.0, -1, 2.0, 0.0, 1.0}}, "tent");
}

PLMap golden_mean_map() {
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    double g = 1.0 / phi;
    return PLMap::validated({{0.0, g, +1, phi, 0.0, 1.0}, {g, 1.0, +1, phi, 0.0, g}},
                            "golden_mean");
}

PLMap full_shift_map(int cells) {
    if (cells < 2)
        throw UsageError("full shift needs at least 2 cells");
    std::vector<Branch> branches;
    double w = 1.0 / cells;
    for (int i = 0; i < cells; ++i)
        branches.push_back({i * w, (i + 1) * w, +1, static_cast<double>(cells), 0.0, 1.0});
    return PLMap::validated(std::move(branches), "full_shift_" + std::to_string(cells));
}

PLMap beta_map(double beta) {
    if (beta <= 1.0 || beta > 2.0)
        throw UsageError("beta_map supports 1 < beta <= 2");
    double c = 1.0 / beta;
    return PLMap::validated({{0.0, c, +1, beta, 0.0, 1.0}, {c, 1.0, +1, beta, 0.0, beta - 1.0}},
                            "beta_" + std::to_string(beta));
}

PLMap two_block_map() {
    return PLMap::validated({{0.0, 0.25, +1, 2.0, 0.0, 0.5},
                             {0.25, 0.5, +1, 2.0, 0.0, 0.5},
                             {0.5, 0.75, +1, 2.0, 0.5, 1.0},
                             {0.75, 1.0, +1, 2.0, 0.5, 1.0}},
                            "two_block");
}

} // namespace corput
