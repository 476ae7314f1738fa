#include "hermix/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>

#include "hermix/errors.hpp"

namespace hermix {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

class PolyParser {
public:
    PolyParser(const std::string& text, const RingPtr& ring)
        : text_(text), ring_(ring) {
        for (std::size_t i = 0; i < ring->vars.size(); ++i)
            var_index_[ring->vars[i]] = i;
    }

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly expr() {
        MultiPoly p = term();
        for (;;) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    MultiPoly factor() {
        MultiPoly p = primary();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) throw ParseError("exponent expected after '^'", pos_);
            unsigned e = static_cast<unsigned>(
                std::stoul(text_.substr(start, pos_ - start)));
            p = p.pow(e);
        }
        return p;
    }

    MultiPoly primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return MultiPoly::constant(ring_, number());
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            auto it = var_index_.find(name);
            if (it == var_index_.end())
                throw ParseError("unknown variable '" + name + "'", start);
            return MultiPoly::variable(ring_, it->second);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Rational number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '.'))
            ++pos_;
        // rational literal p/q (only when the slash is followed by a digit)
        if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        try {
            return rational_from_text(text_.substr(start, pos_ - start));
        } catch (const Error&) {
            throw ParseError("malformed numeric literal", start);
        }
    }

    const std::string& text_;
    RingPtr ring_;
    std::map<std::string, std::size_t> var_index_;
    std::size_t pos_ = 0;
};

// First-appearance scan of identifiers (skipping numeric literals).
void collect_variables(const std::string& text, std::vector<std::string>& vars) {
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (ident_start(c)) {
            std::size_t start = i;
            while (i < text.size() && ident_char(text[i])) ++i;
            std::string name = text.substr(start, i - start);
            if (std::find(vars.begin(), vars.end(), name) == vars.end())
                vars.push_back(name);
        } else {
            ++i;
        }
    }
}

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const RingPtr& ring) {
    return PolyParser(text, ring).parse();
}

std::vector<MultiPoly> parse_polynomials(const std::vector<std::string>& texts) {
    std::vector<std::string> vars;
    for (const auto& t : texts) collect_variables(t, vars);
    if (vars.empty())
        throw ParseError("polynomial system has no variables", 0);
    RingPtr ring = make_ring(vars);
    std::vector<MultiPoly> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
    return out;
}

namespace {

Param parse_param_value(const std::string& text, std::size_t pos) {
    if (text.empty()) throw ParseError("empty parameter value", pos);
    if (text[0] == '?') {
        std::string name = text.substr(1);
        if (name.empty() || !ident_start(name[0]))
            throw ParseError("malformed unknown name '" + text + "'", pos);
        for (char c : name)
            if (!ident_char(c))
                throw ParseError("malformed unknown name '" + text + "'", pos);
        return Param(name);
    }
    try {
        return Param(rational_from_text(text));
    } catch (const Error&) {
        throw ParseError("malformed parameter value '" + text + "'", pos);
    }
}

FamilySpec make_family(const std::string& family,
                       const std::map<std::string, Param>& kv, std::size_t pos) {
    auto need = [&](std::initializer_list<const char*> keys) {
        if (kv.size() != keys.size())
            throw ParseError("family '" + family + "' expects exactly " +
                                 std::to_string(keys.size()) + " parameter(s)",
                             pos);
        std::vector<Param> out;
        for (const char* k : keys) {
            auto it = kv.find(k);
            if (it == kv.end())
                throw ParseError("family '" + family + "' needs parameter '" +
                                     k + "'",
                                 pos);
            out.push_back(it->second);
        }
        return out;
    };
    if (family == "gaussian") {
        auto p = need({"mu", "sigma2"});
        return FamilySpec::gaussian(p[0], p[1]);
    }
    if (family == "gamma") {
        auto p = need({"shape", "scale"});
        return FamilySpec::gamma(p[0], p[1]);
    }
    if (family == "exponential") {
        auto p = need({"theta"});
        return FamilySpec::exponential(p[0]);
    }
    if (family == "uniform") {
        auto p = need({"a", "b"});
        return FamilySpec::uniform(p[0], p[1]);
    }
    if (family == "studentt") {
        auto p = need({"nu"});
        return FamilySpec::student_t(p[0]);
    }
    if (family == "poisson") {
        auto p = need({"rate"});
        return FamilySpec::poisson(p[0]);
    }
    throw UnknownFamily("unknown family '" + family + "'");
}

}  // namespace

std::vector<FamilySpec> parse_family_list(const std::string& text) {
    std::vector<FamilySpec> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        std::string entry = text.substr(pos, end - pos);
        if (entry.empty())
            throw ParseError("empty family entry", pos);

        std::size_t colon = entry.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'family:key=value,...'", pos);
        std::string family = entry.substr(0, colon);

        std::map<std::string, Param> kv;
        std::size_t p = colon + 1;
        while (p <= entry.size()) {
            std::size_t comma = entry.find(',', p);
            if (comma == std::string::npos) comma = entry.size();
            std::string item = entry.substr(p, comma - p);
            std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected 'key=value' in '" + item + "'", pos + p);
            std::string key = item.substr(0, eq);
            if (kv.count(key))
                throw ParseError("duplicate parameter '" + key + "'", pos + p);
            kv.emplace(key, parse_param_value(item.substr(eq + 1), pos + p + eq + 1));
            if (comma == entry.size()) break;
            p = comma + 1;
        }
        out.push_back(make_family(family, kv, pos));
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (out.empty()) throw ParseError("empty family list", 0);
    return out;
}

std::vector<Rational> read_sample(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::vector<Rational> out;
    std::string line;
    std::size_t lineno = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t");
        std::string t = line.substr(a, b - a + 1);
        if (t[0] == '#') continue;
        if (header_allowed && t == "value") {
            header_allowed = false;
            continue;
        }
        try {
            out.push_back(rational_from_text(t));
        } catch (const Error&) {
            throw MalformedLine("cannot parse '" + t + "' as a number", lineno);
        }
        header_allowed = false;
    }
    if (out.empty()) throw EmptySample("no data in '" + path + "'");
    return out;
}

}  // namespace hermix
