#pragma once

#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bihom/bundle.hpp"
#include "bihom/error.hpp"
#include "bihom/field.hpp"
#include "bihom/tensors.hpp"

namespace bihom {

namespace detail {

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
    bool quoted = false;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++column;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') {
                ++column;
                ++i;
            }
            continue;
        }
        int tline = line, tcolumn = column;
        if (c == '{' || c == '}') {
            out.push_back(Token{std::string(1, c), tline, tcolumn, false});
            ++column;
            ++i;
            continue;
        }
        if (c == '"') {
            ++column;
            ++i;
            std::string text;
            bool closed = false;
            while (i < src.size()) {
                char d = src[i];
                if (d == '"') {
                    closed = true;
                    ++column;
                    ++i;
                    break;
                }
                if (d == '\n')
                    throw ParseError("unterminated string", tline, tcolumn);
                if (d == '\\') {
                    if (i + 1 >= src.size())
                        throw ParseError("unterminated string", tline, tcolumn);
                    char e = src[i + 1];
                    if (e == 'n') text += '\n';
                    else if (e == '\\') text += '\\';
                    else if (e == '"') text += '"';
                    else
                        throw ParseError("unknown escape '\\" +
                                             std::string(1, e) + "'",
                                         line, column);
                    column += 2;
                    i += 2;
                    continue;
                }
                text += d;
                ++column;
                ++i;
            }
            if (!closed)
                throw ParseError("unterminated string", tline, tcolumn);
            out.push_back(Token{std::move(text), tline, tcolumn, true});
            continue;
        }
        std::string text;
        while (i < src.size() && src[i] != ' ' && src[i] != '\t' &&
               src[i] != '\r' && src[i] != '\n' && src[i] != '{' &&
               src[i] != '}' && src[i] != '#' && src[i] != '"') {
            text += src[i];
            ++column;
            ++i;
        }
        out.push_back(Token{std::move(text), tline, tcolumn, false});
    }
    return out;
}

class BundleParser {
public:
    explicit BundleParser(const std::string& src) : tokens_(tokenize(src)) {}

    StructureBundle parse() {
        StructureBundle b;
        while (pos_ < tokens_.size()) {
            const Token& key = next("a statement");
            if (key.quoted)
                throw ParseError("unexpected string", key.line, key.column);
            if (key.text == "field") {
                if (have_field_)
                    throw ParseError("duplicate field statement", key.line,
                                     key.column);
                const Token& what = next("a field name");
                if (what.text == "rational") {
                    b.field = FieldDescriptor::rationals();
                } else if (what.text == "gf") {
                    const Token& p = next("a prime");
                    b.field = FieldDescriptor::prime(
                        static_cast<std::int64_t>(parse_unsigned(p)));
                } else {
                    throw ParseError("unknown field '" + what.text + "'",
                                     what.line, what.column);
                }
                have_field_ = true;
            } else if (key.text == "dim") {
                if (have_dim_)
                    throw ParseError("duplicate dim statement", key.line,
                                     key.column);
                b.dim = parse_unsigned(next("a dimension"));
                have_dim_ = true;
            } else if (key.text == "kind") {
                if (!b.kind.empty())
                    throw ParseError("duplicate kind statement", key.line,
                                     key.column);
                b.kind = name_token("a kind tag").text;
            } else if (key.text == "product") {
                parse_product(b);
            } else if (key.text == "comul") {
                parse_comul(b);
            } else if (key.text == "map") {
                parse_map(b);
            } else if (key.text == "tensor") {
                parse_tensor(b);
            } else if (key.text == "provenance") {
                const Token& text = next("a quoted string");
                if (!text.quoted)
                    throw ParseError("expected a quoted string", text.line,
                                     text.column);
                b.provenance.push_back(text.text);
            } else {
                throw ParseError("unknown key '" + key.text + "'", key.line,
                                 key.column);
            }
        }
        if (!have_field_) throw ParseError("missing field statement", 1, 1);
        if (!have_dim_) throw ParseError("missing dim statement", 1, 1);
        return b;
    }

private:
    const Token& next(const std::string& what) {
        if (pos_ >= tokens_.size()) {
            const Token& last =
                tokens_.empty() ? eof_ : tokens_[tokens_.size() - 1];
            throw ParseError("expected " + what + " at end of input",
                             last.line, last.column);
        }
        return tokens_[pos_++];
    }

    Token name_token(const std::string& what) {
        const Token& t = next(what);
        if (t.quoted || t.text == "{" || t.text == "}")
            throw ParseError("expected " + what, t.line, t.column);
        return t;
    }

    std::size_t parse_unsigned(const Token& t) {
        if (t.quoted || t.text.empty())
            throw ParseError("expected an integer", t.line, t.column);
        for (char c : t.text)
            if (c < '0' || c > '9')
                throw ParseError("expected an integer, got '" + t.text + "'",
                                 t.line, t.column);
        try {
            return static_cast<std::size_t>(std::stoull(t.text));
        } catch (const std::exception&) {
            throw ParseError("integer out of range '" + t.text + "'", t.line,
                             t.column);
        }
    }

    std::size_t parse_index(const Token& t, std::size_t dim) {
        std::size_t v = parse_unsigned(t);
        if (v >= dim)
            throw InvariantViolation("index " + t.text +
                                     " out of range for dim " +
                                     std::to_string(dim));
        return v;
    }

    FieldScalar parse_scalar(const Token& t, const FieldDescriptor& field) {
        if (t.quoted)
            throw ParseError("expected a scalar", t.line, t.column);
        try {
            return FieldScalar::parse(t.text, field);
        } catch (const ParseError&) {
            throw ParseError("invalid scalar '" + t.text + "'", t.line,
                             t.column);
        }
    }

    void require_header(const Token& key) {
        if (!have_field_ || !have_dim_)
            throw ParseError("field and dim must precede components", key.line,
                             key.column);
    }

    void expect_open() {
        const Token& t = next("'{'");
        if (t.quoted || t.text != "{")
            throw ParseError("expected '{'", t.line, t.column);
    }

    bool at_close() {
        return pos_ < tokens_.size() && !tokens_[pos_].quoted &&
               tokens_[pos_].text == "}";
    }

    Token unique_name(const Token& key, const char* what,
                      std::set<std::string>& seen) {
        Token name = name_token(std::string("a ") + what + " name");
        if (!seen.insert(name.text).second)
            throw ParseError(std::string("duplicate ") + what + " '" +
                                 name.text + "'",
                             name.line, name.column);
        require_header(key);
        return name;
    }

    template <typename Store>
    void parse_triples(StructureBundle& b, const Token& name, Store&& store) {
        expect_open();
        std::set<std::vector<std::size_t>> seen;
        while (!at_close()) {
            const Token& it = next("an index triple or '}'");
            std::size_t i = parse_index(it, b.dim);
            std::size_t j = parse_index(next("an index"), b.dim);
            std::size_t k = parse_index(next("an index"), b.dim);
            if (!seen.insert({i, j, k}).second)
                throw ParseError("duplicate triple in '" + name.text + "'",
                                 it.line, it.column);
            store(i, j, k, parse_scalar(next("a scalar"), b.field));
        }
        next("'}'");
    }

    void parse_product(StructureBundle& b) {
        Token name = unique_name(tokens_[pos_ - 1], "product", product_names_);
        BilinearProduct p(b.dim, b.field);
        parse_triples(b, name,
                      [&](std::size_t i, std::size_t j, std::size_t k,
                          FieldScalar s) { p.at(i, j, k) = std::move(s); });
        b.products[name.text] = std::move(p);
    }

    void parse_comul(StructureBundle& b) {
        Token name = unique_name(tokens_[pos_ - 1], "comul", comul_names_);
        Comultiplication c(b.dim, b.field);
        parse_triples(b, name,
                      [&](std::size_t i, std::size_t j, std::size_t k,
                          FieldScalar s) { c.at(i, j, k) = std::move(s); });
        b.comuls[name.text] = std::move(c);
    }

    void parse_map(StructureBundle& b) {
        Token name = unique_name(tokens_[pos_ - 1], "map", map_names_);
        expect_open();
        LinearOperator m(b.dim, b.dim, b.field);
        std::size_t count = 0;
        while (!at_close()) {
            const Token& t = next("a scalar or '}'");
            if (count >= b.dim * b.dim)
                throw ParseError("map '" + name.text + "' has more than " +
                                     std::to_string(b.dim * b.dim) +
                                     " entries",
                                 t.line, t.column);
            m.at(count / b.dim, count % b.dim) = parse_scalar(t, b.field);
            ++count;
        }
        const Token& close = next("'}'");
        if (count != b.dim * b.dim)
            throw ParseError("map '" + name.text + "' needs " +
                                 std::to_string(b.dim * b.dim) +
                                 " entries, got " + std::to_string(count),
                             close.line, close.column);
        b.maps[name.text] = std::move(m);
    }

    void parse_tensor(StructureBundle& b) {
        Token name = unique_name(tokens_[pos_ - 1], "tensor", tensor_names_);
        expect_open();
        Tensor2 t(b.dim, b.field);
        std::set<std::vector<std::size_t>> seen;
        while (!at_close()) {
            const Token& it = next("an index pair or '}'");
            std::size_t i = parse_index(it, b.dim);
            std::size_t j = parse_index(next("an index"), b.dim);
            if (!seen.insert({i, j}).second)
                throw ParseError("duplicate pair in '" + name.text + "'",
                                 it.line, it.column);
            t.at(i, j) = parse_scalar(next("a scalar"), b.field);
        }
        next("'}'");
        b.tensors[name.text] = std::move(t);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    bool have_field_ = false;
    bool have_dim_ = false;
    std::set<std::string> product_names_, comul_names_, map_names_,
        tensor_names_;
    Token eof_{"", 1, 1, false};
};

inline std::string escape_string(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"') out += "\\\"";
        else if (c == '\\') out += "\\\\";
        else if (c == '\n') out += "\\n";
        else out += c;
    }
    return out;
}

} // namespace detail

inline StructureBundle load_bundle_text(const std::string& text) {
    detail::BundleParser parser(text);
    StructureBundle b = parser.parse();
    b.validate();
    return b;
}

inline std::string save_bundle_text(const StructureBundle& b) {
    std::ostringstream out;
    if (b.field.kind == FieldKind::Rationals)
        out << "field rational\n";
    else
        out << "field gf " << b.field.characteristic << "\n";
    out << "dim " << b.dim << "\n";
    if (!b.kind.empty()) out << "kind " << b.kind << "\n";
    auto write_cube = [&](const char* key, const std::string& name,
                          auto&& at) {
        out << key << " " << name << " {\n";
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j)
                for (std::size_t k = 0; k < b.dim; ++k) {
                    const FieldScalar& s = at(i, j, k);
                    if (s.is_zero()) continue;
                    out << "  " << i << " " << j << " " << k << " " << s.str()
                        << "\n";
                }
        out << "}\n";
    };
    for (const auto& [name, p] : b.products)
        write_cube("product", name, [&](std::size_t i, std::size_t j,
                                        std::size_t k) -> const FieldScalar& {
            return p.at(i, j, k);
        });
    for (const auto& [name, c] : b.comuls)
        write_cube("comul", name, [&](std::size_t i, std::size_t j,
                                      std::size_t k) -> const FieldScalar& {
            return c.at(i, j, k);
        });
    for (const auto& [name, m] : b.maps) {
        out << "map " << name << " {\n";
        for (std::size_t r = 0; r < b.dim; ++r) {
            out << " ";
            for (std::size_t c = 0; c < b.dim; ++c)
                out << " " << m.at(r, c).str();
            out << "\n";
        }
        out << "}\n";
    }
    for (const auto& [name, t] : b.tensors) {
        out << "tensor " << name << " {\n";
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) {
                if (t.at(i, j).is_zero()) continue;
                out << "  " << i << " " << j << " " << t.at(i, j).str()
                    << "\n";
            }
        out << "}\n";
    }
    for (const auto& line : b.provenance)
        out << "provenance \"" << detail::escape_string(line) << "\"\n";
    return out.str();
}

inline StructureBundle load_bundle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvariantViolation("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_bundle_text(buf.str());
}

inline void save_bundle(const StructureBundle& b, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvariantViolation("cannot open '" + path + "' for writing");
    out << save_bundle_text(b);
}

} // namespace bihom
