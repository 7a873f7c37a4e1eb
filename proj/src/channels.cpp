#include "mixport/channels.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

namespace mixport {
namespace channels {

namespace {

// Shortest representation that round-trips exactly.
std::string num(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string complex_text(Complex z) {
    if (z.imag() == 0.0) {
        return num(z.real());
    }
    std::string out = num(z.real());
    if (z.imag() >= 0.0) {
        out += "+";
    }
    out += num(z.imag()) + "i";
    return out;
}

void require_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidParams(std::string(name) + " must lie in [0,1], got " + num(v));
    }
}

// X-shaped matrix [[m00,0,0,m03],[0,m11,m12,0],[0,m12*,m22,0],[m03*,0,0,m33]].
ComplexMatrix x_shaped(Complex m00, Complex m11, Complex m22, Complex m33, Complex m03,
                       Complex m12) {
    ComplexMatrix m(4);
    m(0, 0) = m00;
    m(1, 1) = m11;
    m(2, 2) = m22;
    m(3, 3) = m33;
    m(0, 3) = m03;
    m(3, 0) = std::conj(m03);
    m(1, 2) = m12;
    m(2, 1) = std::conj(m12);
    return m;
}

ComplexMatrix mems_matrix(double p1, double p2, double p3, double p4) {
    // diag ((p1+p3)/2, p2, p4, (p1+p3)/2), corners (p3-p1)/2.
    const double corner_diag = 0.5 * (p1 + p3);
    const double corner_off = 0.5 * (p3 - p1);
    return x_shaped(corner_diag, p2, p4, 1.0 - p2 - p4 - corner_diag, corner_off, 0.0);
}

} // namespace

std::string family_name(const ChannelSpec& spec) {
    struct Visitor {
        std::string operator()(const Meps&) const { return "meps"; }
        std::string operator()(const MemsRank2&) const { return "mems2"; }
        std::string operator()(const MemsRank3&) const { return "mems3"; }
        std::string operator()(const MemsRank4&) const { return "mems4"; }
        std::string operator()(const Werner&) const { return "werner"; }
        std::string operator()(const GeneralXZ&) const { return "xz"; }
        std::string operator()(const MemsGeneral&) const { return "memsg"; }
    };
    return std::visit(Visitor{}, spec);
}

std::string to_text(const ChannelSpec& spec) {
    struct Visitor {
        std::string operator()(const Meps&) const { return "meps"; }
        std::string operator()(const MemsRank2& c) const { return "mems2:p1=" + num(c.p1); }
        std::string operator()(const MemsRank3& c) const { return "mems3:p1=" + num(c.p1); }
        std::string operator()(const MemsRank4& c) const { return "mems4:p1=" + num(c.p1); }
        std::string operator()(const Werner& c) const { return "werner:r=" + num(c.r); }
        std::string operator()(const GeneralXZ& c) const {
            return "xz:a=" + num(c.a) + ",b=" + num(c.b) + ",c=" + complex_text(c.c) +
                   ",d=" + num(c.d) + ",e=" + complex_text(c.e);
        }
        std::string operator()(const MemsGeneral& c) const {
            return "memsg:p1=" + num(c.p[0]) + ",p2=" + num(c.p[1]) + ",p3=" + num(c.p[2]) +
                   ",p4=" + num(c.p[3]);
        }
    };
    return std::visit(Visitor{}, spec);
}

namespace {

double parse_double(const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw InvalidParams("cannot parse number '" + text + "'");
    }
    if (pos != text.size()) {
        throw InvalidParams("trailing characters in number '" + text + "'");
    }
    return v;
}

// re | re+imi | re-imi | imi
Complex parse_complex(const std::string& text) {
    if (text.empty()) {
        throw InvalidParams("empty complex literal");
    }
    if (text.back() != 'i') {
        return Complex(parse_double(text), 0.0);
    }
    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last +/- that is not part of an exponent and not leading.
    for (std::size_t k = body.size(); k-- > 1;) {
        const char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            const double re = parse_double(body.substr(0, k));
            std::string imag_text = body.substr(k);
            if (imag_text == "+" || imag_text == "-") {
                imag_text += "1";
            }
            return Complex(re, parse_double(imag_text));
        }
    }
    return Complex(0.0, parse_double(body));
}

std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            throw InvalidParams("expected key=value, got '" + item + "'");
        }
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

std::string lookup(const std::vector<std::pair<std::string, std::string>>& kv,
                   const std::string& key) {
    for (const auto& [k, v] : kv) {
        if (k == key) {
            return v;
        }
    }
    throw InvalidParams("missing channel parameter '" + key + "'");
}

} // namespace

ChannelSpec parse_spec(const std::string& text) {
    const std::size_t colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "meps") {
        if (!rest.empty()) {
            throw InvalidParams("meps takes no parameters");
        }
        return Meps{};
    }
    const auto kv = parse_kv(rest);
    if (head == "mems2") {
        return MemsRank2{parse_double(lookup(kv, "p1"))};
    }
    if (head == "mems3") {
        return MemsRank3{parse_double(lookup(kv, "p1"))};
    }
    if (head == "mems4") {
        return MemsRank4{parse_double(lookup(kv, "p1"))};
    }
    if (head == "werner") {
        return Werner{parse_double(lookup(kv, "r"))};
    }
    if (head == "xz") {
        return GeneralXZ{parse_double(lookup(kv, "a")), parse_double(lookup(kv, "b")),
                         parse_complex(lookup(kv, "c")), parse_double(lookup(kv, "d")),
                         parse_complex(lookup(kv, "e"))};
    }
    if (head == "memsg") {
        return MemsGeneral{{parse_double(lookup(kv, "p1")), parse_double(lookup(kv, "p2")),
                            parse_double(lookup(kv, "p3")), parse_double(lookup(kv, "p4"))}};
    }
    throw InvalidParams("unknown channel family '" + head + "'");
}

std::optional<ValidityRange> ordering_range(const ChannelSpec& spec) {
    struct Visitor {
        std::optional<ValidityRange> operator()(const Meps&) const { return std::nullopt; }
        std::optional<ValidityRange> operator()(const MemsRank2&) const {
            return ValidityRange{0.5, 1.0};
        }
        std::optional<ValidityRange> operator()(const MemsRank3&) const {
            return ValidityRange{1.0 / 3.0, 0.5};
        }
        std::optional<ValidityRange> operator()(const MemsRank4&) const {
            return ValidityRange{0.25, 1.0};
        }
        std::optional<ValidityRange> operator()(const Werner&) const { return std::nullopt; }
        std::optional<ValidityRange> operator()(const GeneralXZ&) const { return std::nullopt; }
        std::optional<ValidityRange> operator()(const MemsGeneral&) const { return std::nullopt; }
    };
    return std::visit(Visitor{}, spec);
}

namespace {

Channel make_channel(const ChannelSpec& spec, ComplexMatrix mat, bool physical,
                     std::optional<std::string> warning) {
    DensityMatrix state(std::move(mat), Dims{2, 2},
                        physical ? Validation::Strict : Validation::AllowNonPsd);
    return Channel{spec, std::move(state), physical, std::move(warning)};
}

Channel build_weighted(const ChannelSpec& spec, double p1) {
    struct Weights {
        double p2, p3, p4;
    };
    Weights w{};
    if (std::holds_alternative<MemsRank2>(spec)) {
        w = {1.0 - p1, 0.0, 0.0};
    } else if (std::holds_alternative<MemsRank3>(spec)) {
        w = {p1, 1.0 - 2.0 * p1, 0.0};
    } else {
        const double rest = (1.0 - p1) / 3.0;
        w = {rest, rest, rest};
    }
    bool physical = true;
    std::optional<std::string> warning;
    const auto range = ordering_range(spec);
    if (range && (p1 < range->lo || p1 > range->hi)) {
        warning = family_name(spec) + ": p1=" + num(p1) + " outside the weight-ordered range [" +
                  num(range->lo) + "," + num(range->hi) + "]";
        // The rank-3 matrix has eigenvalue 1-2*p1 and stops being PSD above 1/2.
        if (std::holds_alternative<MemsRank3>(spec) && p1 > 0.5) {
            physical = false;
        }
    }
    return make_channel(spec, mems_matrix(p1, w.p2, w.p3, w.p4), physical, warning);
}

} // namespace

Channel build(const ChannelSpec& spec) {
    if (std::holds_alternative<Meps>(spec)) {
        return make_channel(spec, mems_matrix(1.0, 0.0, 0.0, 0.0), true, std::nullopt);
    }
    if (const auto* r2 = std::get_if<MemsRank2>(&spec)) {
        require_unit_interval(r2->p1, "p1");
        return build_weighted(spec, r2->p1);
    }
    if (const auto* r3 = std::get_if<MemsRank3>(&spec)) {
        require_unit_interval(r3->p1, "p1");
        return build_weighted(spec, r3->p1);
    }
    if (const auto* r4 = std::get_if<MemsRank4>(&spec)) {
        require_unit_interval(r4->p1, "p1");
        return build_weighted(spec, r4->p1);
    }
    if (const auto* w = std::get_if<Werner>(&spec)) {
        require_unit_interval(w->r, "r");
        const double r = w->r;
        return make_channel(spec,
                            x_shaped(0.25 * (1.0 + r), 0.25 * (1.0 - r), 0.25 * (1.0 - r),
                                     0.25 * (1.0 + r), -0.5 * r, 0.0),
                            true, std::nullopt);
    }
    if (const auto* xz = std::get_if<GeneralXZ>(&spec)) {
        const double last = 1.0 - xz->a - xz->b - xz->d;
        if (xz->a < 0.0 || xz->b < 0.0 || xz->d < 0.0 || last < -kPsdTol) {
            throw InvalidParams("xz diagonal weights must be nonnegative with a+b+d <= 1");
        }
        // PSD conditions of the X-shaped form: principal 2x2 blocks.
        if (xz->a * last - std::norm(xz->e) < -kPsdTol) {
            throw InvalidParams("xz violates a*(1-a-b-d) >= |e|^2");
        }
        if (xz->b * xz->d - std::norm(xz->c) < -kPsdTol) {
            throw InvalidParams("xz violates b*d >= |c|^2");
        }
        return make_channel(spec, x_shaped(xz->a, xz->b, xz->d, last, xz->e, xz->c), true,
                            std::nullopt);
    }
    const auto& g = std::get<MemsGeneral>(spec);
    const auto& p = g.p;
    if (!(p[0] >= p[1] && p[1] >= p[2] && p[2] >= p[3] && p[3] >= 0.0)) {
        throw InvalidParams("memsg requires p1 >= p2 >= p3 >= p4 >= 0");
    }
    if (std::abs(p[0] + p[1] + p[2] + p[3] - 1.0) > 1e-12) {
        throw InvalidParams("memsg weights must sum to 1");
    }
    return make_channel(spec, mems_matrix(p[0], p[1], p[2], p[3]), true, std::nullopt);
}

double werner_to_mems_p1(double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw OutOfRange("werner parameter r must lie in [0,1]");
    }
    return 0.25 * (1.0 + 3.0 * r);
}

double mems_p1_to_werner(double p1) {
    if (!(p1 >= 0.25 && p1 <= 1.0)) {
        throw OutOfRange("rank-4 parameter p1 must lie in [1/4,1]");
    }
    return (4.0 * p1 - 1.0) / 3.0;
}

} // namespace channels
} // namespace mixport
