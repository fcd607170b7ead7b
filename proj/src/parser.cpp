#include "ckm/parser.hpp"

#include "ckm/error.hpp"

#include <sstream>

namespace ckm {

namespace {

class Parser {
public:
    Parser(const std::vector<Token>& tokens, std::string file)
        : tokens_(tokens), file_(std::move(file)) {}

    std::vector<ClassInfo> run() {
        std::vector<ClassInfo> out;
        while (!at_end())
            out.push_back(class_decl());
        return out;
    }

private:
    const std::vector<Token>& tokens_;
    std::string file_;
    size_t pos_ = 0;

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek(size_t ahead = 0) const {
        static const Token eof{TokenKind::Punctuation, "<eof>", 0, 0};
        return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : eof;
    }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::ostringstream os;
        os << file_ << ":" << t.line << ":" << t.column
           << ": expected " << expected << ", got '" << t.text << "'";
        throw ParseError(os.str());
    }

    const Token& expect_punct(std::string_view p) {
        if (!peek().is(TokenKind::Punctuation, p)) fail("'" + std::string(p) + "'");
        return advance();
    }
    const Token& expect_keyword(std::string_view k) {
        if (!peek().is(TokenKind::Keyword, k)) fail("'" + std::string(k) + "'");
        return advance();
    }
    std::string expect_identifier(const std::string& what) {
        if (peek().kind != TokenKind::Identifier) fail(what);
        return advance().text;
    }

    ClassInfo class_decl() {
        expect_keyword("class");
        ClassInfo cls;
        cls.name = expect_identifier("class name");
        if (peek().is(TokenKind::Keyword, "extends")) {
            advance();
            // Resolution to in-model vs EXTERNAL happens in build_class_model.
            cls.superclass = SuperRef::external(expect_identifier("superclass name"));
        }
        if (peek().is(TokenKind::Keyword, "implements")) {
            advance();
            cls.interfaces.insert(expect_identifier("interface name"));
            while (peek().is(TokenKind::Punctuation, ",")) {
                advance();
                cls.interfaces.insert(expect_identifier("interface name"));
            }
        }
        expect_punct("{");
        while (!peek().is(TokenKind::Punctuation, "}"))
            member(cls);
        expect_punct("}");
        return cls;
    }

    void member(ClassInfo& cls) {
        if (peek().kind != TokenKind::Identifier) fail("member declaration");

        if (peek().text == cls.name && peek(1).is(TokenKind::Punctuation, "(")) {
            MethodInfo ctor;
            ctor.name = advance().text;
            ctor.is_constructor = true;
            ctor.return_type = "void";
            finish_method(cls, ctor);
            return;
        }

        std::string type = advance().text;
        std::string name = expect_identifier("member name");
        if (peek().is(TokenKind::Punctuation, ";")) {
            advance();
            cls.fields.push_back({name, type});
            return;
        }
        if (peek().is(TokenKind::Punctuation, "(")) {
            MethodInfo m;
            m.name = name;
            m.return_type = type;
            m.referenced_types.insert(type);
            finish_method(cls, m);
            return;
        }
        fail("';' or '('");
    }

    void finish_method(ClassInfo& cls, MethodInfo m) {
        expect_punct("(");
        std::map<std::string, std::string> locals; // name -> declared type
        if (!peek().is(TokenKind::Punctuation, ")")) {
            for (;;) {
                std::string ptype = expect_identifier("parameter type");
                std::string pname = expect_identifier("parameter name");
                m.param_types.push_back(ptype);
                m.referenced_types.insert(ptype);
                locals[pname] = ptype;
                if (!peek().is(TokenKind::Punctuation, ",")) break;
                advance();
            }
        }
        expect_punct(")");
        m.arity = static_cast<int>(m.param_types.size());

        std::vector<Token> body = block_tokens();
        scan_body(cls, m, body, locals);
        cls.methods.push_back(std::move(m));
    }

    std::vector<Token> block_tokens() {
        expect_punct("{");
        std::vector<Token> body;
        int depth = 1;
        while (depth > 0) {
            if (at_end()) fail("'}'");
            const Token& t = advance();
            if (t.is(TokenKind::Punctuation, "{")) ++depth;
            if (t.is(TokenKind::Punctuation, "}")) --depth;
            if (depth > 0) body.push_back(t);
        }
        return body;
    }

    // Counts call arguments starting at the opening paren: top-level commas
    // plus one, zero for an empty argument list.
    static int count_args(const std::vector<Token>& ts, size_t open) {
        int depth = 0, commas = 0;
        bool any = false;
        for (size_t i = open; i < ts.size(); ++i) {
            const Token& t = ts[i];
            if (t.kind == TokenKind::Punctuation) {
                if (t.text == "(") { ++depth; continue; }
                if (t.text == ")") {
                    if (--depth == 0) return any ? commas + 1 : 0;
                    continue;
                }
                if (t.text == "," && depth == 1) { ++commas; continue; }
            }
            if (depth == 1) any = true;
        }
        return any ? commas + 1 : 0;
    }

    void scan_body(const ClassInfo& cls, MethodInfo& m,
                   const std::vector<Token>& ts,
                   std::map<std::string, std::string>& locals) {
        auto is_p = [&](size_t i, std::string_view p) {
            return i < ts.size() && ts[i].is(TokenKind::Punctuation, p);
        };
        auto is_ident = [&](size_t i) {
            return i < ts.size() && ts[i].kind == TokenKind::Identifier;
        };

        for (size_t i = 0; i < ts.size();) {
            const Token& t = ts[i];

            if (t.is(TokenKind::Keyword, "new") && is_ident(i + 1) && is_p(i + 2, "(")) {
                const std::string& type = ts[i + 1].text;
                m.invocations.insert({type, type, count_args(ts, i + 2)});
                m.referenced_types.insert(type);
                i += 3; // arguments are scanned by the main loop
                continue;
            }

            if (t.is(TokenKind::Keyword, "this") && is_p(i + 1, ".") && is_ident(i + 2)) {
                if (is_p(i + 3, "(")) {
                    m.invocations.insert({cls.name, ts[i + 2].text, count_args(ts, i + 3)});
                    i += 4;
                } else {
                    if (cls.declares_field(ts[i + 2].text))
                        m.field_uses.insert(ts[i + 2].text);
                    i += 3;
                }
                continue;
            }

            if (t.kind == TokenKind::Identifier) {
                bool after_dot = i > 0 && ts[i - 1].is(TokenKind::Punctuation, ".");

                if (after_dot) {
                    // Chained call on a temporary: receiver unresolvable.
                    if (i >= 2 && ts[i - 2].is(TokenKind::Punctuation, ")") && is_p(i + 1, "(")) {
                        m.invocations.insert({"?", t.text, count_args(ts, i + 1)});
                        i += 2;
                        continue;
                    }
                    ++i; // member of a foreign object; no own-class fact
                    continue;
                }

                // recv.name(args)
                if (is_p(i + 1, ".") && is_ident(i + 2) && is_p(i + 3, "(")) {
                    std::string recv;
                    if (auto it = locals.find(t.text); it != locals.end()) {
                        recv = it->second;
                    } else if (cls.declares_field(t.text)) {
                        for (const FieldInfo& f : cls.fields)
                            if (f.name == t.text) recv = f.type;
                        m.field_uses.insert(t.text);
                    } else {
                        recv = "?" + t.text;
                    }
                    if (!recv.empty() && recv[0] != '?')
                        m.referenced_types.insert(recv);
                    m.invocations.insert({recv, ts[i + 2].text, count_args(ts, i + 3)});
                    i += 4;
                    continue;
                }

                // Bare call resolves to the enclosing class.
                if (is_p(i + 1, "(")) {
                    m.invocations.insert({cls.name, t.text, count_args(ts, i + 1)});
                    i += 2;
                    continue;
                }

                // Local declaration: Type name ;  or  Type name = ...
                if (is_ident(i + 1) && (is_p(i + 2, ";") || is_p(i + 2, "="))) {
                    locals[ts[i + 1].text] = t.text;
                    m.referenced_types.insert(t.text);
                    i += 2;
                    continue;
                }

                // Bare identifier naming a declared field (locals shadow it).
                if (!locals.count(t.text) && cls.declares_field(t.text))
                    m.field_uses.insert(t.text);
                ++i;
                continue;
            }

            ++i;
        }
    }
};

} // namespace

std::vector<ClassInfo> parse_unit(const std::vector<Token>& tokens,
                                  const std::string& file) {
    return Parser(tokens, file).run();
}

ClassModel build_class_model(const std::vector<std::vector<ClassInfo>>& units,
                             const std::map<std::string, std::string>& module_map) {
    ClassModel model;
    for (const auto& unit : units)
        for (const ClassInfo& cls : unit) {
            if (!model.classes.emplace(cls.name, cls).second)
                throw DuplicateClass(cls.name);
        }

    for (auto& [name, cls] : model.classes) {
        if (cls.superclass.kind == SuperRef::Kind::None) continue;
        if (model.classes.count(cls.superclass.name))
            cls.superclass = SuperRef::internal(cls.superclass.name);
        else
            cls.superclass = SuperRef::external(cls.superclass.name);
    }

    for (const auto& [name, cls] : model.classes) {
        (void)cls;
        if (!module_map.count(name)) throw UnmappedClass(name);
    }
    model.module_map = module_map;

    for (const Violation& v : validate_model(model)) {
        if (v.rule == "inheritance-cycle" || v.rule == "self-inheritance")
            throw InheritanceCycle(v.class_name + ": " + v.detail);
        throw SchemaError(v.class_name + ": " + v.rule + ": " + v.detail);
    }
    return model;
}

} // namespace ckm
