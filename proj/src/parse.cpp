#include "maclane/parse.hpp"

#include <cctype>
#include <functional>

#include "json.hpp"
#include "maclane/errors.hpp"

namespace maclane {

Rat parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty rational", 0);
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal '" + text + "'", 0);
    }
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;
    std::uint64_t p;

    explicit PolyParser(const std::string& text, std::uint64_t prime) : s(text), p(prime) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }

    Int integer() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw parse_error("expected an integer", i);
        if (i < s.size() && s[i] == '.') throw parse_error("floating literals are rejected", i);
        return Int(s.substr(start, i - start));
    }

    Poly base() {
        skip();
        if (i >= s.size()) throw parse_error("unexpected end of expression", i);
        char c = s[i];
        if (c == '(') {
            ++i;
            Poly e = expr();
            if (!eat(')')) throw parse_error("missing ')'", i);
            return e;
        }
        if (c == 'x') {
            ++i;
            return Poly::x();
        }
        if (c == 'p') {
            ++i;
            return Poly::constant(Rat(static_cast<unsigned long>(p)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (peek('/')) {
                // a rational literal b/c, not division
                std::size_t save = i;
                ++i;
                skip();
                if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    Int den = integer();
                    if (den == 0) throw parse_error("zero denominator", i);
                    Rat q(num);
                    q /= Rat(den);
                    q.canonicalize();
                    return Poly::constant(q);
                }
                i = save;
            }
            return Poly::constant(Rat(num));
        }
        throw parse_error(std::string("unexpected character '") + c + "'", i);
    }

    Poly power() {
        Poly b = base();
        if (eat('^')) {
            Int e = integer();
            if (e < 0 || !e.fits_ulong_p()) throw parse_error("bad exponent", i);
            return b.pow(mpz_get_ui(e.get_mpz_t()));
        }
        return b;
    }

    Poly term() {
        Poly t = power();
        while (true) {
            skip();
            if (eat('*')) {
                t = t * power();
                continue;
            }
            // implicit multiplication for forms like "2x" or "3p"
            if (i < s.size() && (s[i] == 'x' || s[i] == 'p' || s[i] == '(')) {
                t = t * power();
                continue;
            }
            return t;
        }
    }

    Poly expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip();
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }
};

} // namespace

Poly parse_poly(const std::string& text, std::uint64_t p) {
    PolyParser parser(text, p);
    Poly out = parser.expr();
    parser.skip();
    if (parser.i != text.size()) throw parse_error("trailing input", parser.i);
    return out;
}

std::string valuation_json(const InductiveValuation& v) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& st : v.stages()) {
        nlohmann::json s;
        s["phi"] = st.phi.str("x", v.base().p);
        s["lambda"] = st.lambda.get_str();
        j.push_back(s);
    }
    return j.dump();
}

InductiveValuation valuation_from_json(const std::string& text, const BaseField& base) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array()) throw parse_error("valuation JSON must be an array of stages", 0);
    InductiveValuation v(base);
    for (const auto& s : j) {
        Poly phi = parse_poly(s.at("phi").get<std::string>(), base.p);
        Rat lambda = parse_rational(s.at("lambda").get<std::string>());
        v = augment(v, phi, lambda);
    }
    return v;
}

std::string model_json(const Model& m) {
    nlohmann::json j;
    j["schema"] = 1;
    j["p"] = m.base().p;
    nlohmann::json vals = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        nlohmann::json entry;
        entry["valuation"] = nlohmann::json::parse(valuation_json(m.valuations()[i]));
        entry["printed"] = m.valuations()[i].str();
        entry["multiplicity"] = m.multiplicity(i).get_str();
        vals.push_back(entry);
    }
    j["valuations"] = vals;
    return j.dump(2);
}

Model model_from_json(const std::string& text, const BaseField& base) {
    nlohmann::json j = nlohmann::json::parse(text);
    Model m(base, "parsed");
    for (const auto& entry : j.at("valuations"))
        m.insert(valuation_from_json(entry.at("valuation").dump(), base));
    m.canonicalize();
    return m;
}

std::string model_dot(const Model& m, const DivisorProfile* parity) {
    DualGraph g = dual_graph(m);
    std::string out = "graph model {\n  node [shape=circle];\n";
    // preorder from the root for stable output
    std::vector<std::size_t> order;
    std::function<void(std::size_t)> visit = [&](std::size_t i) {
        order.push_back(i);
        for (std::size_t j = 0; j < m.size(); ++j)
            if (g.parent[j] == static_cast<long>(i)) visit(j);
    };
    for (std::size_t i = 0; i < m.size(); ++i)
        if (g.parent[i] < 0) visit(i);
    for (std::size_t i : order) {
        bool odd = false;
        if (parity)
            for (const auto& c : parity->components)
                if (val_equal(c.valuation, m.valuations()[i])) odd = !c.even;
        out += "  n" + std::to_string(i) + " [label=\"mult=" + m.multiplicity(i).get_str() +
               "\"";
        if (odd) out += " style=filled fillcolor=black fontcolor=white";
        out += "];  // " + m.valuations()[i].str() + "\n";
    }
    for (const auto& [a, b] : g.edges)
        out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

} // namespace maclane
