#include "sigscope/parse.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sigscope/errors.hpp"

namespace sigscope {

namespace {

bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '+' || c == '~' || c == '\'' || c == '@' || c == '.' || c == '-';
}

const std::set<std::string> kKeywords = {"ntree", "pairtree", "ideal", "start", "state",
                                         "edge",  "tail",     "xtail", "ytail", "dtail",
                                         "base",  "letter"};

struct Token {
    enum Kind { Ident, Keyword, Number, LBrace, RBrace, Arrow, End } kind;
    std::string text;
    Letter number = 0;
    int line = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& what) const {
        fail(Errc::Parse, "line " + std::to_string(cur_.line) + ": " + what);
    }

  private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
        cur_.line = line_;
        if (pos_ >= text_.size()) {
            cur_ = {Token::End, "", 0, line_};
            return;
        }
        char c = text_[pos_];
        if (c == '{') {
            cur_ = {Token::LBrace, "{", 0, line_};
            ++pos_;
        } else if (c == '}') {
            cur_ = {Token::RBrace, "}", 0, line_};
            ++pos_;
        } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            cur_ = {Token::Arrow, "->", 0, line_};
            pos_ += 2;
        } else if (c >= '0' && c <= '9') {
            std::size_t begin = pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            std::string digits = text_.substr(begin, pos_ - begin);
            if (digits.size() > 19)
                fail(Errc::Parse, "line " + std::to_string(line_) + ": number too large");
            cur_ = {Token::Number, digits, std::stoull(digits), line_};
        } else if (ident_char(c)) {
            std::size_t begin = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            std::string word = text_.substr(begin, pos_ - begin);
            cur_ = {kKeywords.count(word) ? Token::Keyword : Token::Ident, word, 0, line_};
        } else {
            fail(Errc::Parse, "line " + std::to_string(line_) + ": stray character '" +
                                  std::string(1, c) + "'");
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    Token cur_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    SpecFile run() {
        SpecFile out;
        std::set<std::string> names;
        while (lex_.peek().kind != Token::End) {
            Token head = expect_keyword();
            std::string name = expect_ident("object name");
            if (!names.insert(name).second) lex_.error("duplicate object name " + name);
            if (head.text == "ntree") {
                out.ntrees.push_back({name, parse_ntree(name)});
            } else if (head.text == "pairtree") {
                out.pairtrees.push_back({name, parse_pairtree(name)});
            } else if (head.text == "ideal") {
                if (name == "fin") lex_.error("the ideal name fin is reserved");
                out.ideals.push_back(parse_ideal(name));
            } else {
                lex_.error("expected ntree, pairtree or ideal, got " + head.text);
            }
        }
        return out;
    }

  private:
    Token expect_keyword() {
        Token t = lex_.take();
        if (t.kind != Token::Keyword) lex_.error("expected a keyword, got " + t.text);
        return t;
    }

    std::string expect_ident(const std::string& what) {
        Token t = lex_.take();
        if (t.kind != Token::Ident) lex_.error("expected " + what + ", got " + t.text);
        return t.text;
    }

    Letter expect_number(const std::string& what) {
        Token t = lex_.take();
        if (t.kind != Token::Number) lex_.error("expected " + what + ", got " + t.text);
        return t.number;
    }

    void expect(Token::Kind kind, const std::string& what) {
        Token t = lex_.take();
        if (t.kind != kind) lex_.error("expected " + what + ", got " + t.text);
    }

    ArithClass expect_class() {
        Letter thr = expect_number("a class threshold");
        Letter mod = expect_number("a class modulus");
        Letter res = expect_number("a class residue");
        try {
            return make_class(thr, mod, res);
        } catch (const Error& e) {
            lex_.error(e.what());
        }
    }

    // State interning shared by both tree kinds.
    struct StateTable {
        std::map<std::string, int> ids;
        std::vector<std::string> order;
        std::set<std::string> declared;

        template <typename Tree>
        int intern(Tree& tree, const std::string& name) {
            auto it = ids.find(name);
            if (it != ids.end()) return it->second;
            int id = tree.add_state(name);
            ids.emplace(name, id);
            order.push_back(name);
            return id;
        }
    };

    NTree parse_ntree(const std::string& obj) {
        NTree tree;
        StateTable tab;
        expect(Token::LBrace, "{");
        bool have_start = false;
        while (lex_.peek().kind != Token::RBrace) {
            Token head = expect_keyword();
            if (head.text == "start") {
                if (have_start) lex_.error("second start in " + obj);
                have_start = true;
                tree.set_start(tab.intern(tree, expect_ident("a state name")));
            } else if (head.text == "state") {
                std::string name = expect_ident("a state name");
                if (!tab.declared.insert(name).second)
                    lex_.error("state " + name + " declared twice in " + obj);
                int q = tab.intern(tree, name);
                expect(Token::LBrace, "{");
                while (lex_.peek().kind != Token::RBrace) {
                    Token rule = expect_keyword();
                    if (rule.text == "edge") {
                        Letter a = expect_number("a letter");
                        expect(Token::Arrow, "->");
                        tree.add_edge(q, a, tab.intern(tree, expect_ident("a target state")));
                    } else if (rule.text == "tail") {
                        ArithClass cls = expect_class();
                        expect(Token::Arrow, "->");
                        tree.add_tail(q, cls, tab.intern(tree, expect_ident("a target state")));
                    } else {
                        lex_.error("expected edge or tail, got " + rule.text);
                    }
                }
                expect(Token::RBrace, "}");
            } else {
                lex_.error("expected start or state, got " + head.text);
            }
        }
        expect(Token::RBrace, "}");
        if (!have_start && tree.state_count() > 0) lex_.error("missing start in " + obj);
        for (const std::string& name : tab.order)
            if (!tab.declared.count(name))
                lex_.error("state " + name + " is referenced but never declared in " + obj);
        try {
            tree.validate();
        } catch (const Error& e) {
            fail(Errc::Validation, obj + ": " + e.what());
        }
        return tree;
    }

    PairTree parse_pairtree(const std::string& obj) {
        PairTree tree;
        StateTable tab;
        expect(Token::LBrace, "{");
        bool have_start = false;
        while (lex_.peek().kind != Token::RBrace) {
            Token head = expect_keyword();
            if (head.text == "start") {
                if (have_start) lex_.error("second start in " + obj);
                have_start = true;
                tree.set_start(tab.intern(tree, expect_ident("a state name")));
            } else if (head.text == "state") {
                std::string name = expect_ident("a state name");
                if (!tab.declared.insert(name).second)
                    lex_.error("state " + name + " declared twice in " + obj);
                int q = tab.intern(tree, name);
                expect(Token::LBrace, "{");
                while (lex_.peek().kind != Token::RBrace) {
                    Token rule = expect_keyword();
                    if (rule.text == "edge") {
                        Letter x = expect_number("a first letter");
                        Letter y = expect_number("a second letter");
                        expect(Token::Arrow, "->");
                        tree.add_edge(q, x, y, tab.intern(tree, expect_ident("a target state")));
                    } else if (rule.text == "xtail") {
                        ArithClass cls = expect_class();
                        Letter y = expect_number("a second letter");
                        expect(Token::Arrow, "->");
                        tree.add_xtail(q, cls, y, tab.intern(tree, expect_ident("a target state")));
                    } else if (rule.text == "ytail") {
                        Letter x = expect_number("a first letter");
                        ArithClass cls = expect_class();
                        expect(Token::Arrow, "->");
                        tree.add_ytail(q, x, cls, tab.intern(tree, expect_ident("a target state")));
                    } else if (rule.text == "dtail") {
                        ArithClass cls = expect_class();
                        expect(Token::Arrow, "->");
                        tree.add_diag(q, cls, tab.intern(tree, expect_ident("a target state")));
                    } else {
                        lex_.error("expected edge, xtail, ytail or dtail, got " + rule.text);
                    }
                }
                expect(Token::RBrace, "}");
            } else {
                lex_.error("expected start or state, got " + head.text);
            }
        }
        expect(Token::RBrace, "}");
        if (!have_start && tree.state_count() > 0) lex_.error("missing start in " + obj);
        for (const std::string& name : tab.order)
            if (!tab.declared.count(name))
                lex_.error("state " + name + " is referenced but never declared in " + obj);
        try {
            tree.validate();
        } catch (const Error& e) {
            fail(Errc::Validation, obj + ": " + e.what());
        }
        return tree;
    }

    Ideal parse_ideal(const std::string& obj) {
        Ideal ideal;
        ideal.name = obj;
        expect(Token::LBrace, "{");
        Token head = expect_keyword();
        if (head.text != "base") lex_.error("expected base, got " + head.text);
        expect(Token::LBrace, "{");
        while (lex_.peek().kind != Token::RBrace) {
            Token item = expect_keyword();
            if (item.text == "letter") {
                ideal.base.add_letter(expect_number("a letter"));
            } else if (item.text == "tail") {
                ideal.base.add_class(expect_class());
            } else {
                lex_.error("expected letter or tail, got " + item.text);
            }
        }
        expect(Token::RBrace, "}");
        expect(Token::RBrace, "}");
        try {
            check_proper(ideal);
        } catch (const Error& e) {
            fail(Errc::ImproperIdeal, obj + ": " + e.what());
        }
        return ideal;
    }

    Lexer lex_;
};

}  // namespace

const NTree* SpecFile::find_ntree(const std::string& name) const {
    for (const auto& t : ntrees)
        if (t.name == name) return &t.tree;
    return nullptr;
}

const PairTree* SpecFile::find_pairtree(const std::string& name) const {
    for (const auto& t : pairtrees)
        if (t.name == name) return &t.tree;
    return nullptr;
}

std::optional<Ideal> SpecFile::find_ideal(const std::string& name) const {
    if (name == "fin") return fin_ideal();
    for (const auto& i : ideals)
        if (i.name == name) return i;
    return std::nullopt;
}

SpecFile parse_file(const std::string& text) { return Parser(text).run(); }

SpecFile load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::Parse, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_file(buf.str());
}

namespace {

// Serialized state names: keep originals where possible, uniquify duplicates.
std::vector<std::string> unique_names(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    std::set<std::string> used;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::string base = raw[i].empty() ? "s" + std::to_string(i) : raw[i];
        std::string name = base;
        for (int k = 2; !used.insert(name).second; ++k)
            name = base + "~" + std::to_string(k);
        out.push_back(name);
    }
    return out;
}

std::string class_text(const ArithClass& c) {
    return std::to_string(c.threshold) + " " + std::to_string(c.modulus) + " " +
           std::to_string(c.residue);
}

}  // namespace

std::string to_text(const NTree& t, const std::string& name) {
    std::ostringstream out;
    out << "ntree " << name << " {\n";
    if (!t.is_empty()) {
        std::vector<std::string> raw;
        for (int q = 0; q < t.state_count(); ++q) raw.push_back(t.state(q).name);
        std::vector<std::string> names = unique_names(raw);
        out << "  start " << names[t.start()] << "\n";
        for (int q = 0; q < t.state_count(); ++q) {
            out << "  state " << names[q] << " {\n";
            for (const auto& e : t.state(q).edges)
                out << "    edge " << e.letter << " -> " << names[e.target] << "\n";
            for (const auto& tl : t.state(q).tails)
                out << "    tail " << class_text(tl.cls) << " -> " << names[tl.target] << "\n";
            out << "  }\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_text(const PairTree& s, const std::string& name) {
    std::ostringstream out;
    out << "pairtree " << name << " {\n";
    if (!s.is_empty()) {
        std::vector<std::string> raw;
        for (int q = 0; q < s.state_count(); ++q) raw.push_back(s.state(q).name);
        std::vector<std::string> names = unique_names(raw);
        out << "  start " << names[s.start()] << "\n";
        for (int q = 0; q < s.state_count(); ++q) {
            const PairState& st = s.state(q);
            out << "  state " << names[q] << " {\n";
            for (const auto& e : st.edges)
                out << "    edge " << e.x << " " << e.y << " -> " << names[e.target] << "\n";
            for (const auto& m : st.xtails)
                out << "    xtail " << class_text(m.xcls) << " " << m.y << " -> "
                    << names[m.target] << "\n";
            for (const auto& m : st.ytails)
                out << "    ytail " << m.x << " " << class_text(m.ycls) << " -> "
                    << names[m.target] << "\n";
            for (const auto& m : st.diags)
                out << "    dtail " << class_text(m.cls) << " -> " << names[m.target] << "\n";
            out << "  }\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_text(const Ideal& ideal) {
    std::ostringstream out;
    out << "ideal " << ideal.name << " {\n  base {\n";
    for (Letter a : ideal.base.explicit_letters) out << "    letter " << a << "\n";
    for (const auto& c : ideal.base.classes) out << "    tail " << class_text(c) << "\n";
    out << "  }\n}\n";
    return out.str();
}

}  // namespace sigscope
