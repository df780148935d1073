#include "acgw/document.hpp"

#include <cctype>
#include <sstream>

namespace acgw {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

std::string describe_object(const FinSetObj& s) { return describe_set(s); }
std::string describe_object(const VectObj& v) { return "dim " + std::to_string(v.dim); }

namespace {

// ---------------------------------------------------------------------------
// lexing

struct Token {
    std::string text;
    int column = 1;
    bool word = false;
};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.'; }

std::vector<Token> lex(const std::string& line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const int col = static_cast<int>(i) + 1;
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({"->", col, false});
            i += 2;
        } else if (word_char(c) || (c == '-' && i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
            std::size_t j = i + 1;
            while (j < line.size() && word_char(line[j])) ++j;
            out.push_back({line.substr(i, j - i), col, true});
            i = j;
        } else if (std::string("{}[],:>").find(c) != std::string::npos) {
            out.push_back({std::string(1, c), col, false});
            ++i;
        } else {
            throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

class Cursor {
public:
    Cursor(std::vector<Token> tokens, int line, int end_column)
        : tokens_(std::move(tokens)), line_(line), end_column_(end_column) {}

    int line() const { return line_; }
    bool done() const { return pos_ >= tokens_.size(); }
    int column() const { return done() ? end_column_ : tokens_[pos_].column; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }

    const Token& peek() const {
        if (done()) fail("unexpected end of line");
        return tokens_[pos_];
    }
    bool peek_is(const std::string& s) const { return !done() && tokens_[pos_].text == s; }

    Token next() {
        const Token& t = peek();
        ++pos_;
        return t;
    }
    void expect(const std::string& s) {
        if (!peek_is(s)) fail("expected '" + s + "'" + (done() ? "" : ", found '" + tokens_[pos_].text + "'"));
        ++pos_;
    }
    bool accept(const std::string& s) {
        if (!peek_is(s)) return false;
        ++pos_;
        return true;
    }
    std::string word() {
        if (done() || !tokens_[pos_].word) fail("expected a name");
        return next().text;
    }
    long long integer() {
        const int col = column();
        const std::string w = word();
        try {
            std::size_t used = 0;
            long long v = std::stoll(w, &used);
            if (used != w.size()) throw std::invalid_argument(w);
            return v;
        } catch (const std::exception&) {
            throw ParseError(line_, col, "expected an integer, found '" + w + "'");
        }
    }
    void finish() {
        if (!done()) fail("unexpected '" + tokens_[pos_].text + "'");
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
    int end_column_;
};

struct Line {
    int number;
    Cursor cur;
};

// ---------------------------------------------------------------------------
// per-instance syntax

template <class I>
struct Syntax;

template <>
struct Syntax<FinSetInstance> {
    using I = FinSetInstance;

    static FinSetObj object(Cursor& c, const I&) {
        c.expect("{");
        std::vector<Element> els;
        const int col = c.column();
        if (!c.accept("}")) {
            do {
                els.push_back(c.word());
            } while (c.accept(","));
            c.expect("}");
        }
        try {
            return FinSetObj(std::move(els));
        } catch (const ValidationError& e) {
            throw ParseError(c.line(), col, e.what());
        }
    }

    static InjectionData map(Cursor& c, const FinSetObj& src, const FinSetObj& tgt) {
        c.expect("{");
        InjectionData d{src, tgt, std::vector<std::size_t>(src.size(), 0)};
        std::vector<bool> seen(src.size(), false);
        if (!c.accept("}")) {
            do {
                const int col = c.column();
                const auto a = c.word();
                c.expect(">");
                const auto b = c.word();
                auto i = src.index_of(a);
                if (!i) throw ParseError(c.line(), col, "'" + a + "' is not in the source " + describe_set(src));
                auto j = tgt.index_of(b);
                if (!j) throw ParseError(c.line(), col, "'" + b + "' is not in the target " + describe_set(tgt));
                if (seen[*i]) throw ParseError(c.line(), col, "'" + a + "' is mapped twice");
                seen[*i] = true;
                d.map[*i] = *j;
            } while (c.accept(","));
            c.expect("}");
        }
        for (std::size_t k = 0; k < seen.size(); ++k)
            if (!seen[k]) c.fail("no image given for '" + src[k] + "'");
        return d;
    }

    static SetHor hor(Cursor& c, const I&, const FinSetObj& s, const FinSetObj& t) { return SetHor(map(c, s, t)); }
    static SetVer ver(Cursor& c, const I&, const FinSetObj& s, const FinSetObj& t) { return SetVer(map(c, s, t)); }

    static InjectionData by_name(const Cursor& c, const FinSetObj& s, const FinSetObj& t, const std::string& what) {
        try {
            return inclusion(s, t);
        } catch (const PreconditionError& e) {
            c.fail(what + ": no map given and " + e.what());
        }
    }
    static SetHor default_hor(const Cursor& c, const I&, const FinSetObj& s, const FinSetObj& t, const std::string& what) {
        return SetHor(by_name(c, s, t, what));
    }
    static SetVer default_ver(const Cursor& c, const I&, const FinSetObj& s, const FinSetObj& t, const std::string& what) {
        return SetVer(by_name(c, s, t, what));
    }
    static bool can_default_bar() { return true; }

    static std::string write_object(const FinSetObj& s) { return describe_set(s); }
    static std::optional<std::string> write_map(const InjectionData& d) {
        try {
            if (inclusion(d.source, d.target) == d) return std::nullopt;
        } catch (const PreconditionError&) {
        }
        std::string out = "{";
        for (std::size_t k = 0; k < d.map.size(); ++k) {
            if (k) out += ", ";
            out += d.source[k] + ">" + d.target[d.map[k]];
        }
        return out + "}";
    }
    static std::string header(const I&) { return "instance set"; }
};

template <>
struct Syntax<LinearInstance> {
    using I = LinearInstance;

    static VectObj object(Cursor& c, const I& inst) {
        c.expect("dim");
        const int col = c.column();
        const long long n = c.integer();
        if (n < 0) throw ParseError(c.line(), col, "negative dimension");
        return inst.space(static_cast<std::size_t>(n));
    }

    static FpMatrix matrix(Cursor& c, const I& inst, std::size_t rows, std::size_t cols) {
        const int col = c.column();
        c.expect("[");
        std::vector<std::vector<long long>> data;
        if (!c.accept("]")) {
            do {
                c.expect("[");
                std::vector<long long> row;
                if (!c.accept("]")) {
                    do {
                        row.push_back(c.integer());
                    } while (c.accept(","));
                    c.expect("]");
                }
                data.push_back(std::move(row));
            } while (c.accept(","));
            c.expect("]");
        }
        if (data.size() != rows)
            throw ParseError(c.line(), col, "matrix has " + std::to_string(data.size()) + " rows, expected " +
                                                std::to_string(rows));
        for (const auto& r : data)
            if (r.size() != cols)
                throw ParseError(c.line(), col, "matrix row has " + std::to_string(r.size()) +
                                                    " entries, expected " + std::to_string(cols));
        return FpMatrix::from_rows(data, cols, inst.prime());
    }

    static MatMono hor(Cursor& c, const I& inst, const VectObj& s, const VectObj& t) {
        return {s, t, matrix(c, inst, t.dim, s.dim)};
    }
    static MatEpi ver(Cursor& c, const I& inst, const VectObj& s, const VectObj& t) {
        return {s, t, matrix(c, inst, s.dim, t.dim)};
    }
    static MatMono default_hor(const Cursor& c, const I& inst, const VectObj& s, const VectObj& t,
                               const std::string& what) {
        if (s.dim == 0) return inst.initial_h(t);
        c.fail(what + ": linear maps must be given explicitly");
    }
    static MatEpi default_ver(const Cursor& c, const I& inst, const VectObj& s, const VectObj& t,
                              const std::string& what) {
        if (s.dim == 0) return inst.initial_v(t);
        c.fail(what + ": linear maps must be given explicitly");
    }
    static bool can_default_bar() { return false; }

    static std::string write_object(const VectObj& v) { return "dim " + std::to_string(v.dim); }
    static std::optional<std::string> write_map(const MatMono& m) {
        if (m.source.dim == 0) return std::nullopt;
        return m.matrix.to_string();
    }
    static std::optional<std::string> write_map(const MatEpi& m) {
        if (m.source.dim == 0) return std::nullopt;
        return m.matrix.to_string();
    }
    static std::string header(const I& inst) { return "instance linear " + std::to_string(inst.prime()); }
};

// ---------------------------------------------------------------------------
// blocks

template <class I>
class Parser {
public:
    using S = Syntax<I>;

    Parser(I inst, std::vector<Line> lines) : lines_(std::move(lines)) { doc_.inst = inst; }

    DocumentOf<I> run() {
        while (pos_ < lines_.size()) {
            Line& l = lines_[pos_++];
            Cursor& c = l.cur;
            const std::string kw = c.word();
            if (kw == "complex") complex_block(c);
            else if (kw == "hor") hor_block(c);
            else if (kw == "ver") ver_block(c);
            else if (kw == "map") map_block(c);
            else if (kw == "ses") ses_line(c);
            else if (kw == "snake") snake_block(c);
            else if (kw == "instance") throw ParseError(l.number, 1, "duplicate instance header");
            else throw ParseError(l.number, 1, "unknown section '" + kw + "'");
        }
        return std::move(doc_);
    }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    DocumentOf<I> doc_;

    const I& inst() const { return doc_.inst; }

    std::string fresh_name(Cursor& c) {
        const int col = c.column();
        auto n = c.word();
        auto taken = [&](const auto& v) {
            for (const auto& [k, _] : v)
                if (k == n) return true;
            return false;
        };
        if (taken(doc_.complexes) || taken(doc_.hors) || taken(doc_.vers) || taken(doc_.maps) || taken(doc_.seses) ||
            taken(doc_.snakes))
            throw ParseError(c.line(), col, "name '" + n + "' is already defined");
        return n;
    }

    const ChainComplex<I>& complex_ref(Cursor& c) {
        const int col = c.column();
        const auto n = c.word();
        if (auto x = doc_.complex(n)) return *x;
        throw ParseError(c.line(), col, "unknown complex '" + n + "'");
    }

    /// Lines up to the matching 'end'.
    std::vector<Line*> body(int start_line) {
        std::vector<Line*> out;
        while (pos_ < lines_.size()) {
            Line& l = lines_[pos_++];
            if (l.cur.peek_is("end")) {
                l.cur.next();
                l.cur.finish();
                return out;
            }
            out.push_back(&l);
        }
        throw ParseError(start_line, 1, "section is missing its 'end'");
    }

    int degree(Cursor& c, int lo, int hi) {
        const int col = c.column();
        const long long d = c.integer();
        if (d < lo || d > hi)
            throw ParseError(c.line(), col, "degree " + std::to_string(d) + " outside " + std::to_string(lo) + ".." +
                                                std::to_string(hi));
        return static_cast<int>(d);
    }

    void complex_block(Cursor& c) {
        const int start = c.line();
        const auto name = fresh_name(c);
        const long long lo = c.integer();
        const long long hi = c.integer();
        c.finish();
        if (hi < lo - 1) c.fail("empty support must be written as LO LO-1");
        ChainComplex<I> x{inst(), static_cast<int>(lo), {}, {}};
        const auto n = static_cast<std::size_t>(hi - lo + 1);
        std::vector<std::optional<typename I::Obj>> objs(n);
        std::vector<Line*> trans_lines(n, nullptr);
        for (Line* l : body(start)) {
            Cursor& b = l->cur;
            const auto kw = b.word();
            if (kw == "X") {
                const int col = b.column();
                const int d = degree(b, x.lo, static_cast<int>(hi));
                b.expect(":");
                auto& slot = objs[static_cast<std::size_t>(d - x.lo)];
                if (slot) throw ParseError(b.line(), col, "X " + std::to_string(d) + " given twice");
                slot = S::object(b, inst());
                b.finish();
            } else if (kw == "T") {
                const int col = b.column();
                const int d = degree(b, x.lo + 1, static_cast<int>(hi));
                auto& slot = trans_lines[static_cast<std::size_t>(d - x.lo)];
                if (slot) throw ParseError(b.line(), col, "T " + std::to_string(d) + " given twice");
                slot = l;
            } else {
                throw ParseError(b.line(), 1, "expected 'X', 'T' or 'end', found '" + kw + "'");
            }
        }
        for (auto& o : objs) x.objects.push_back(o ? *o : inst().zero());
        for (int d = x.lo + 1; d <= static_cast<int>(hi); ++d) {
            Line* l = trans_lines[static_cast<std::size_t>(d - x.lo)];
            const auto up_obj = x.objects[static_cast<std::size_t>(d - x.lo)];
            const auto down_obj = x.objects[static_cast<std::size_t>(d - 1 - x.lo)];
            if (!l) {
                x.transitions.push_back({inst().zero(), inst().initial_v(up_obj), inst().initial_h(down_obj)});
                continue;
            }
            Cursor& b = l->cur;
            b.expect(":");
            const auto bar = S::object(b, inst());
            std::optional<typename I::Ver> up;
            std::optional<typename I::Hor> down;
            while (!b.done()) {
                const int col = b.column();
                const auto kw = b.word();
                if (kw == "up" && !up) up = S::ver(b, inst(), bar, up_obj);
                else if (kw == "down" && !down) down = S::hor(b, inst(), bar, down_obj);
                else throw ParseError(b.line(), col, "expected 'up' or 'down'");
            }
            if (!up) up = S::default_ver(b, inst(), bar, up_obj, "T " + std::to_string(d) + " up");
            if (!down) down = S::default_hor(b, inst(), bar, down_obj, "T " + std::to_string(d) + " down");
            x.transitions.push_back({bar, *up, *down});
        }
        doc_.complexes.emplace_back(name, std::move(x));
    }

    template <class M, class ParseFn, class DefaultFn>
    Levelwise<M> levelwise(std::map<int, Line*>& given, int lo, int hi, auto src_of, auto tgt_of, ParseFn parse,
                           DefaultFn fallback, const std::string& what, const Cursor& header) {
        Levelwise<M> out{lo, {}};
        for (int d = lo; d <= hi; ++d) {
            const auto s = src_of(d);
            const auto t = tgt_of(d);
            auto it = given.find(d);
            if (it == given.end()) {
                out.items.push_back(fallback(header, inst(), s, t, what + " " + std::to_string(d)));
            } else {
                Cursor& b = it->second->cur;
                out.items.push_back(parse(b, inst(), s, t));
                b.finish();
            }
        }
        return out;
    }

    /// Reads 'KEY DEGREE : ...' lines, leaving each cursor after the colon.
    std::map<std::string, std::map<int, Line*>> keyed(const std::vector<Line*>& lines,
                                                      const std::vector<std::string>& keys, int lo, int hi) {
        std::map<std::string, std::map<int, Line*>> out;
        for (Line* l : lines) {
            Cursor& b = l->cur;
            const int col = b.column();
            const auto kw = b.word();
            if (std::find(keys.begin(), keys.end(), kw) == keys.end()) {
                std::string all;
                for (const auto& k : keys) all += (all.empty() ? "'" : ", '") + k + "'";
                throw ParseError(b.line(), col, "expected one of " + all + " or 'end', found '" + kw + "'");
            }
            const int dcol = b.column();
            const int d = degree(b, lo, hi);
            b.expect(":");
            if (!out[kw].emplace(d, l).second)
                throw ParseError(b.line(), dcol, kw + " " + std::to_string(d) + " given twice");
        }
        return out;
    }

    void hor_block(Cursor& c) { mor_block<true>(c); }
    void ver_block(Cursor& c) { mor_block<false>(c); }

    template <bool Horizontal>
    void mor_block(Cursor& c) {
        const int start = c.line();
        const auto name = fresh_name(c);
        c.expect(":");
        const auto src_name = c.peek().text;
        const auto& src = complex_ref(c);
        c.expect("->");
        const auto tgt_name = c.peek().text;
        const auto& tgt = complex_ref(c);
        c.finish();
        const auto r = support_union(src, tgt);
        const int lo = r.empty() ? 0 : r.lo, hi = r.empty() ? -1 : r.hi;
        auto given = keyed(body(start), {"level", "trans"}, lo, hi);
        auto obj = [&](const ChainComplex<I>& x) { return [&x](int d) { return x.object(d); }; };
        auto bar = [&](const ChainComplex<I>& x) { return [&x](int d) { return x.transition(d).bar; }; };
        if constexpr (Horizontal) {
            auto level = levelwise<typename I::Hor>(given["level"], lo, hi, obj(src), obj(tgt), S::hor,
                                                    S::default_hor, "level", c);
            auto trans = levelwise<typename I::Hor>(given["trans"], lo, hi, bar(src), bar(tgt), S::hor,
                                                    S::default_hor, "trans", c);
            doc_.hors.emplace_back(name, NamedHor<I>{src_name, tgt_name, {src, tgt, std::move(level), std::move(trans)}});
        } else {
            auto level = levelwise<typename I::Ver>(given["level"], lo, hi, obj(src), obj(tgt), S::ver,
                                                    S::default_ver, "level", c);
            auto trans = levelwise<typename I::Ver>(given["trans"], lo, hi, bar(src), bar(tgt), S::ver,
                                                    S::default_ver, "trans", c);
            doc_.vers.emplace_back(name, NamedVer<I>{src_name, tgt_name, {src, tgt, std::move(level), std::move(trans)}});
        }
    }

    void map_block(Cursor& c) {
        const int start = c.line();
        const auto name = fresh_name(c);
        c.expect(":");
        const auto src_name = c.peek().text;
        const auto& src = complex_ref(c);
        c.expect("->");
        const auto tgt_name = c.peek().text;
        const auto& tgt = complex_ref(c);
        c.expect("via");
        const auto mid_name = c.peek().text;
        const auto& mid = complex_ref(c);
        c.finish();
        const auto r = support_union(src, mid, tgt);
        const int lo = r.empty() ? 0 : r.lo, hi = r.empty() ? -1 : r.hi;
        auto given = keyed(body(start), {"back", "front", "tback", "tfront"}, lo, hi);
        auto obj = [](const ChainComplex<I>& x) { return [&x](int d) { return x.object(d); }; };
        auto bar = [](const ChainComplex<I>& x) { return [&x](int d) { return x.transition(d).bar; }; };
        ChainMap<I> m{src, mid, tgt, {}, {}, {}, {}};
        m.back = levelwise<typename I::Ver>(given["back"], lo, hi, obj(mid), obj(src), S::ver, S::default_ver, "back", c);
        m.front = levelwise<typename I::Hor>(given["front"], lo, hi, obj(mid), obj(tgt), S::hor, S::default_hor, "front", c);
        m.trans_back = levelwise<typename I::Ver>(given["tback"], lo, hi, bar(mid), bar(src), S::ver, S::default_ver,
                                                  "tback", c);
        m.trans_front = levelwise<typename I::Hor>(given["tfront"], lo, hi, bar(mid), bar(tgt), S::hor,
                                                   S::default_hor, "tfront", c);
        doc_.maps.emplace_back(name, NamedMap<I>{src_name, mid_name, tgt_name, std::move(m)});
    }

    void ses_line(Cursor& c) {
        const auto name = fresh_name(c);
        c.expect(":");
        const int hcol = c.column();
        const auto h = c.word();
        const int vcol = c.column();
        const auto v = c.word();
        c.finish();
        const HorChainMor<I>* hm = nullptr;
        const VerChainMor<I>* vm = nullptr;
        for (const auto& [n, x] : doc_.hors)
            if (n == h) hm = &x.mor;
        for (const auto& [n, x] : doc_.vers)
            if (n == v) vm = &x.mor;
        if (!hm) throw ParseError(c.line(), hcol, "unknown horizontal morphism '" + h + "'");
        if (!vm) throw ParseError(c.line(), vcol, "unknown vertical morphism '" + v + "'");
        doc_.seses.emplace_back(name, NamedSES<I>{h, v, {*hm, *vm}});
    }

    void snake_block(Cursor& c) {
        const int start = c.line();
        const auto name = fresh_name(c);
        const int kcol = c.column();
        const auto kind = c.word();
        if (kind != "weak" && kind != "strong") throw ParseError(c.line(), kcol, "expected 'weak' or 'strong'");
        c.finish();
        const bool strong = kind == "strong";
        std::vector<std::string> names = {"A", "B", "C", "X", "Y", "Z", "Ap", "Bp", "Cp"};
        if (strong) names.insert(names.end(), {"Ao", "Co"});
        std::map<std::string, typename I::Obj> objs;
        std::map<std::string, Line*> mors;
        for (Line* l : body(start)) {
            Cursor& b = l->cur;
            const int col = b.column();
            const auto kw = b.word();
            if (kw == "object") {
                const int ncol = b.column();
                const auto n = b.word();
                if (std::find(names.begin(), names.end(), n) == names.end())
                    throw ParseError(b.line(), ncol, "unknown snake object '" + n + "'");
                b.expect(":");
                if (!objs.emplace(n, S::object(b, inst())).second)
                    throw ParseError(b.line(), ncol, "object " + n + " given twice");
                b.finish();
            } else {
                b.expect(">");
                const auto to = b.word();
                b.expect(":");
                if (!mors.emplace(kw + ">" + to, l).second)
                    throw ParseError(b.line(), col, "morphism " + kw + ">" + to + " given twice");
            }
        }
        for (const auto& n : names)
            if (!objs.count(n)) throw ParseError(start, 1, "snake is missing object " + n);
        std::map<std::string, bool> used;
        auto hor = [&](const std::string& a, const std::string& b) {
            const auto key = a + ">" + b;
            used[key] = true;
            auto it = mors.find(key);
            if (it == mors.end()) return S::default_hor(c, inst(), objs[a], objs[b], key);
            auto m = S::hor(it->second->cur, inst(), objs[a], objs[b]);
            it->second->cur.finish();
            return m;
        };
        auto ver = [&](const std::string& a, const std::string& b) {
            const auto key = a + ">" + b;
            used[key] = true;
            auto it = mors.find(key);
            if (it == mors.end()) return S::default_ver(c, inst(), objs[a], objs[b], key);
            auto m = S::ver(it->second->cur, inst(), objs[a], objs[b]);
            it->second->cur.finish();
            return m;
        };
        NamedSnake<I> s;
        s.strong = strong;
        auto& w = s.input.weak;
        w.inst = inst();
        w.a_b = hor("A", "B");
        w.c_b = ver("C", "B");
        w.x_y = hor("X", "Y");
        w.z_y = ver("Z", "Y");
        w.a2_b2 = hor("Ap", "Bp");
        w.c2_b2 = ver("Cp", "Bp");
        w.x_a = ver("X", "A");
        w.x_a2 = hor("X", "Ap");
        w.y_b = ver("Y", "B");
        w.y_b2 = hor("Y", "Bp");
        w.z_c = ver("Z", "C");
        w.z_c2 = hor("Z", "Cp");
        if (strong) {
            s.input.abar_a = ver("A", "Ao");
            s.input.cbar_c = hor("Cp", "Co");
        }
        for (const auto& [key, l] : mors)
            if (!used[key]) throw ParseError(l->number, 1, "unknown snake morphism '" + key + "'");
        doc_.snakes.emplace_back(name, std::move(s));
    }
};

// ---------------------------------------------------------------------------
// writing

template <class I>
class Writer {
public:
    using S = Syntax<I>;
    explicit Writer(std::ostringstream& os) : os_(os) {}

    void run(const DocumentOf<I>& doc) {
        os_ << S::header(doc.inst) << '\n';
        for (const auto& [name, x] : doc.complexes) complex(name, x);
        for (const auto& [name, h] : doc.hors) mor("hor", name, h.source, h.target, h.mor);
        for (const auto& [name, v] : doc.vers) mor("ver", name, v.source, v.target, v.mor);
        for (const auto& [name, m] : doc.maps) map(name, m);
        for (const auto& [name, s] : doc.seses) os_ << "\nses " << name << " : " << s.hor << ' ' << s.ver << '\n';
        for (const auto& [name, s] : doc.snakes) snake(name, s);
    }

private:
    std::ostringstream& os_;

    void complex(const std::string& name, const ChainComplex<I>& x) {
        os_ << "\ncomplex " << name << ' ' << x.lo << ' ' << x.hi() << '\n';
        for (int d = x.hi(); d >= x.lo; --d) {
            os_ << "  X " << d << " : " << S::write_object(x.object(d)) << '\n';
            if (d > x.lo) {
                const auto t = x.transition(d);
                os_ << "  T " << d << " : " << S::write_object(t.bar);
                if (auto m = S::write_map(t.upper)) os_ << " up " << *m;
                if (auto m = S::write_map(t.lower)) os_ << " down " << *m;
                os_ << '\n';
            }
        }
        os_ << "end\n";
    }

    template <class M>
    void lines(const char* key, const Levelwise<M>& l) {
        for (int k = static_cast<int>(l.items.size()) - 1; k >= 0; --k)
            if (auto m = S::write_map(l.items[static_cast<std::size_t>(k)]))
                os_ << "  " << key << ' ' << l.lo + k << " : " << *m << '\n';
    }

    template <class Mor>
    void mor(const char* kw, const std::string& name, const std::string& s, const std::string& t, const Mor& m) {
        os_ << '\n' << kw << ' ' << name << " : " << s << " -> " << t << '\n';
        lines("level", m.level);
        lines("trans", m.trans);
        os_ << "end\n";
    }

    void map(const std::string& name, const NamedMap<I>& m) {
        os_ << "\nmap " << name << " : " << m.source << " -> " << m.target << " via " << m.middle << '\n';
        lines("back", m.map.back);
        lines("front", m.map.front);
        lines("tback", m.map.trans_back);
        lines("tfront", m.map.trans_front);
        os_ << "end\n";
    }

    void snake(const std::string& name, const NamedSnake<I>& s) {
        const auto& w = s.input.weak;
        os_ << "\nsnake " << name << ' ' << (s.strong ? "strong" : "weak") << '\n';
        auto obj = [&](const char* n, const typename I::Obj& o) {
            os_ << "  object " << n << " : " << S::write_object(o) << '\n';
        };
        obj("A", w.a_b.source);
        obj("B", w.a_b.target);
        obj("C", w.c_b.source);
        obj("X", w.x_y.source);
        obj("Y", w.x_y.target);
        obj("Z", w.z_y.source);
        obj("Ap", w.a2_b2.source);
        obj("Bp", w.a2_b2.target);
        obj("Cp", w.c2_b2.source);
        if (s.strong) {
            obj("Ao", s.input.abar_a.target);
            obj("Co", s.input.cbar_c.target);
        }
        auto mor = [&](const char* key, const auto& m) {
            if (auto t = S::write_map(m)) os_ << "  " << key << " : " << *t << '\n';
        };
        mor("A>B", w.a_b);
        mor("C>B", w.c_b);
        mor("X>Y", w.x_y);
        mor("Z>Y", w.z_y);
        mor("Ap>Bp", w.a2_b2);
        mor("Cp>Bp", w.c2_b2);
        mor("X>A", w.x_a);
        mor("X>Ap", w.x_a2);
        mor("Y>B", w.y_b);
        mor("Y>Bp", w.y_b2);
        mor("Z>C", w.z_c);
        mor("Z>Cp", w.z_c2);
        if (s.strong) {
            mor("A>Ao", s.input.abar_a);
            mor("Cp>Co", s.input.cbar_c);
        }
        os_ << "end\n";
    }
};

}  // namespace

Document parse_document(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto toks = lex(raw, number);
        if (toks.empty()) continue;
        lines.push_back({number, Cursor(std::move(toks), number, static_cast<int>(raw.size()) + 1)});
    }
    if (lines.empty()) throw ParseError(number + 1, 1, "empty document: expected 'instance set' or 'instance linear P'");
    Cursor& h = lines.front().cur;
    h.expect("instance");
    const int col = h.column();
    const auto kind = h.word();
    std::vector<Line> rest(std::make_move_iterator(lines.begin() + 1), std::make_move_iterator(lines.end()));
    if (kind == "set") {
        h.finish();
        return Parser<FinSetInstance>(FinSetInstance{}, std::move(rest)).run();
    }
    if (kind == "linear") {
        const int pcol = h.column();
        const long long p = h.integer();
        h.finish();
        if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint32_t>(p)))
            throw ParseError(h.line(), pcol, "characteristic " + std::to_string(p) + " is not a supported prime");
        return Parser<LinearInstance>(LinearInstance(static_cast<std::uint32_t>(p)), std::move(rest)).run();
    }
    throw ParseError(h.line(), col, "unknown instance '" + kind + "', expected 'set' or 'linear'");
}

std::string serialize_document(const Document& doc) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& d) {
            using D = std::decay_t<decltype(d)>;
            Writer<decltype(D{}.inst)>(os).run(d);
        },
        doc);
    return os.str();
}

}  // namespace acgw
