#include "commands.hpp"

#include <sstream>

#include "acgw/generators.hpp"
#include "acgw/homology_maps.hpp"
#include "acgw/les.hpp"
#include "acgw/oracle.hpp"
#include "acgw/render.hpp"

namespace acgw::cli {

using nlohmann::json;

namespace {

json object_json(const FinSetObj& s) { return s.elements(); }
json object_json(const VectObj& v) { return json{{"dim", v.dim}}; }

template <class I>
std::string law_name() {
    return std::is_same_v<I, FinSetInstance> ? "cardinality law" : "dimension law";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
    return out;
}

json violations_json(const std::vector<Violation>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back({{"degree", x.degree}, {"message", x.message}});
    return out;
}

void report_violations(Output& out, const std::string& what, const std::vector<Violation>& v) {
    out.code = kSemantic;
    out.text += what + ": invalid\n";
    for (const auto& x : v) out.text += "  degree " + std::to_string(x.degree) + ": " + x.message + "\n";
}

/// Returns false (and fills out) when some complex fails validation.
template <class I>
bool complexes_valid(const DocumentOf<I>& doc, Output& out) {
    bool ok = true;
    for (const auto& [name, x] : doc.complexes)
        if (auto v = validate_complex(x); !v.empty()) {
            report_violations(out, "complex " + name, v);
            out.json["invalid"][name] = violations_json(v);
            ok = false;
        }
    return ok;
}

template <class I>
void list_zigzag(const ExactZigzag<I>& z, std::ostringstream& os, json& j) {
    j["objects"] = json::array();
    j["transitions"] = json::array();
    for (std::size_t k = 0; k < z.objects.size(); ++k) {
        os << "  " << z.labels[k] << " = " << z.inst.describe(z.objects[k]) << '\n';
        j["objects"].push_back({{"label", z.labels[k]}, {"value", object_json(z.objects[k])}});
        if (k < z.transitions.size()) {
            os << "    via " << z.transition_labels[k] << " = " << z.inst.describe(z.transitions[k].bar) << '\n';
            j["transitions"].push_back(
                {{"label", z.transition_labels[k]}, {"value", object_json(z.transitions[k].bar)}});
        }
    }
    const auto failures = zigzag_exactness_failures(z);
    j["exact"] = failures.empty();
    os << "  exact: " << (failures.empty() ? "yes" : "no") << '\n';
    for (auto k : failures) os << "    fails at " << z.labels[k] << '\n';
}

template <class I>
Output validate(const DocumentOf<I>& doc) {
    Output out;
    std::size_t checked = 0;
    auto run = [&](const std::string& what, const std::vector<Violation>& v) {
        ++checked;
        if (v.empty()) {
            out.text += what + ": ok\n";
            out.json["results"][what] = "ok";
        } else {
            report_violations(out, what, v);
            out.json["results"][what] = violations_json(v);
        }
    };
    for (const auto& [n, x] : doc.complexes) run("complex " + n, validate_complex(x));
    for (const auto& [n, h] : doc.hors) run("hor " + n, validate_hor(h.mor));
    for (const auto& [n, v] : doc.vers) run("ver " + n, validate_ver(v.mor));
    for (const auto& [n, m] : doc.maps) run("map " + n, validate_chain_map(m.map));
    for (const auto& [n, s] : doc.seses) run("ses " + n, validate_ses(s.ses));
    for (const auto& [n, s] : doc.snakes) {
        ++checked;
        const auto v = s.strong ? validate_snake(s.input) : validate_snake(s.input.weak);
        if (v.empty()) {
            out.text += "snake " + n + ": ok\n";
            out.json["results"]["snake " + n] = "ok";
        } else {
            out.code = kSemantic;
            out.text += "snake " + n + ": invalid\n";
            for (const auto& m : v) out.text += "  " + m + "\n";
            out.json["results"]["snake " + n] = v;
        }
    }
    out.json["ok"] = out.code == kOk;
    out.text += out.code == kOk ? "ok\n" : "validation failed\n";
    if (checked == 0) out.json["results"] = json::object();
    return out;
}

template <class I>
Output homology(const DocumentOf<I>& doc) {
    Output out;
    if (!complexes_valid(doc, out)) return out;
    DegreeRange r{0, -1};
    for (const auto& [n, x] : doc.complexes) {
        const auto s = support_union(x);
        if (s.empty()) continue;
        r = r.empty() ? s : DegreeRange{std::min(r.lo, s.lo), std::max(r.hi, s.hi)};
    }
    std::ostringstream os;
    for (int i = r.hi; !r.empty() && i >= r.lo; --i) {
        std::vector<std::string> parts;
        for (const auto& [n, x] : doc.complexes) {
            const auto h = homology_at(x, i);
            parts.push_back("H_" + std::to_string(i) + "(" + n + ") = " + x.inst.describe(h));
            out.json["homology"][n][std::to_string(i)] = object_json(h);
        }
        os << join(parts, "; ") << '\n';
    }
    for (const auto& [n, x] : doc.complexes) {
        std::vector<int> bad;
        for (int i = x.lo; i <= x.hi(); ++i) {
            const auto lhs = x.inst.size(homology_at(x, i));
            const auto rhs = x.inst.size(x.object(i)) - x.inst.size(x.transition(i).bar) -
                             x.inst.size(x.transition(i + 1).bar);
            if (lhs != rhs) bad.push_back(i);
        }
        os << law_name<I>() << " for " << n << " (|H_i| = |X_i| - |Xbar_i| - |Xbar_{i+1}|): ";
        if (bad.empty()) {
            os << "holds at all degrees\n";
        } else {
            std::vector<std::string> ds;
            for (int d : bad) ds.push_back(std::to_string(d));
            os << "fails at degrees " << join(ds, ", ") << '\n';
            out.code = kSemantic;
        }
        out.json["law"][n] = bad.empty();
    }
    out.text = os.str();
    return out;
}

template <class I>
Output exact(const DocumentOf<I>& doc) {
    Output out;
    if (!complexes_valid(doc, out)) return out;
    for (const auto& [n, x] : doc.complexes) {
        const auto bad = non_exact_degrees(x);
        std::vector<std::string> ds;
        for (int d : bad) ds.push_back(std::to_string(d));
        out.text += n + (bad.empty() ? ": exact\n" : ": not exact at degrees " + join(ds, ", ") + "\n");
        out.json["exact"][n] = bad.empty();
        if (!bad.empty()) out.code = kSemantic;
    }
    return out;
}

template <class I>
Output snake(const DocumentOf<I>& doc) {
    Output out;
    if (doc.snakes.empty()) throw UsageError("document has no snake section");
    std::ostringstream os;
    for (const auto& [n, s] : doc.snakes) {
        const auto v = s.strong ? validate_snake(s.input) : validate_snake(s.input.weak);
        if (!v.empty()) {
            out.code = kSemantic;
            os << "snake " << n << ": invalid\n";
            for (const auto& m : v) os << "  " << m << '\n';
            out.json[n]["invalid"] = v;
            continue;
        }
        const auto r = s.strong ? snake_strong(s.input) : snake_weak(s.input.weak);
        os << "snake " << n << " (" << (s.strong ? "strong" : "weak") << ")\n";
        list_zigzag(r.zigzag, os, out.json[n]);
        if (!is_exact_zigzag(r.zigzag)) out.code = kSemantic;
    }
    out.text = os.str();
    return out;
}

template <class I>
Output les(const DocumentOf<I>& doc) {
    Output out;
    if (doc.seses.empty()) throw UsageError("document has no ses section");
    std::ostringstream os;
    for (const auto& [n, s] : doc.seses) {
        if (auto v = validate_ses(s.ses); !v.empty()) {
            report_violations(out, "ses " + n, v);
            out.json[n]["invalid"] = violations_json(v);
            continue;
        }
        const auto r = les_of_ses(s.ses);
        os << "long exact sequence of " << n << " (" << s.hor << ", " << s.ver << ")\n";
        list_zigzag(r.zigzag, os, out.json[n]);
        if (!is_exact_zigzag(r.zigzag)) out.code = kSemantic;
    }
    out.text += os.str();
    return out;
}

template <class I>
void map_report(const std::string& name, const ChainMap<I>& f, Output& out, std::ostringstream& os) {
    if (auto v = validate_chain_map(f); !v.empty()) {
        out.code = kSemantic;
        os << name << ": invalid\n" << format_violations(v);
        out.json[name]["invalid"] = violations_json(v);
        return;
    }
    os << name << '\n';
    const auto& inst = f.source.inst;
    for (const auto& [i, h] : h_on_map_all(f)) {
        os << "  H_" << i << ": " << inst.describe(h.source) << " <-| " << inst.describe(h.middle) << " >-> "
           << inst.describe(h.target) << '\n';
        out.json[name]["degrees"][std::to_string(i)] = {
            {"source", object_json(h.source)}, {"middle", object_json(h.middle)}, {"target", object_json(h.target)}};
    }
    const bool q = is_quasi_iso(f);
    os << "  quasi-isomorphism: " << (q ? "yes" : "no") << '\n';
    out.json[name]["quasi_iso"] = q;
}

template <class I>
Output map_homology(const DocumentOf<I>& doc) {
    Output out;
    if (doc.maps.empty() && doc.hors.empty() && doc.vers.empty())
        throw UsageError("document has no map, hor or ver section");
    std::ostringstream os;
    for (const auto& [n, m] : doc.maps) map_report("map " + n, m.map, out, os);
    for (const auto& [n, h] : doc.hors) {
        if (auto v = validate_hor(h.mor); !v.empty()) {
            report_violations(out, "hor " + n, v);
            continue;
        }
        map_report("hor " + n, to_chain_map(h.mor), out, os);
    }
    for (const auto& [n, g] : doc.vers) {
        if (auto v = validate_ver(g.mor); !v.empty()) {
            report_violations(out, "ver " + n, v);
            continue;
        }
        map_report("ver " + n, to_chain_map(g.mor), out, os);
    }
    out.text += os.str();
    return out;
}

Output oracle(const SetDocument& doc) {
    Output out;
    if (!complexes_valid(doc, out)) return out;
    for (const auto& [n, x] : doc.complexes) {
        const auto dims = rank_homology_dims(free_complex(x));
        std::vector<std::string> bad;
        json degrees = json::object();
        for (int i = x.lo; i <= x.hi(); ++i) {
            const auto ours = homology_at(x, i).size();
            const auto theirs = dims[static_cast<std::size_t>(i - x.lo)];
            degrees[std::to_string(i)] = {{"combinatorial", ours}, {"rank", theirs}};
            if (ours != theirs) bad.push_back(std::to_string(i));
        }
        out.text += n + (bad.empty() ? ": agree at all degrees\n" : ": disagree at degrees " + join(bad, ", ") + "\n");
        out.json[n] = {{"agree", bad.empty()}, {"degrees", degrees}};
        if (!bad.empty()) out.code = kSemantic;
    }
    return out;
}

template <class I>
Output render(const DocumentOf<I>& doc, const std::string& name) {
    Output out;
    bool found = false;
    for (const auto& [n, x] : doc.complexes)
        if (name.empty() || n == name) {
            found = true;
            out.text += render_complex_dot(x, n);
        }
    for (const auto& [n, s] : doc.snakes)
        if (name.empty() || n == name) {
            found = true;
            const auto r = s.strong ? snake_strong(s.input) : snake_weak(s.input.weak);
            out.text += render_zigzag_dot(r.zigzag, n);
        }
    for (const auto& [n, s] : doc.seses)
        if (name.empty() || n == name) {
            found = true;
            out.text += render_zigzag_dot(les_of_ses(s.ses).zigzag, n);
        }
    if (!name.empty() && !found) throw UsageError("no complex, snake or ses named '" + name + "'");
    out.json["dot"] = out.text;
    return out;
}

template <class F>
Output dispatch(const Document& doc, F&& f) {
    return std::visit([&](const auto& d) { return f(d); }, doc);
}

}  // namespace

Output cmd_validate(const Document& doc) {
    return dispatch(doc, [](const auto& d) { return validate(d); });
}
Output cmd_homology(const Document& doc) {
    return dispatch(doc, [](const auto& d) { return homology(d); });
}
Output cmd_exact(const Document& doc) {
    return dispatch(doc, [](const auto& d) { return exact(d); });
}
Output cmd_snake(const Document& doc) {
    return dispatch(doc, [](const auto& d) { return snake(d); });
}
Output cmd_les(const Document& doc) {
    return dispatch(doc, [](const auto& d) { return les(d); });
}
Output cmd_map_homology(const Document& doc) {
    return dispatch(doc, [](const auto& d) { return map_homology(d); });
}
Output cmd_oracle(const Document& doc) {
    const auto* set = std::get_if<SetDocument>(&doc);
    if (!set) throw UsageError("oracle compares against set complexes; this is a linear document");
    return oracle(*set);
}
Output cmd_render(const Document& doc, const std::string& format, const std::string& name) {
    if (format != "dot") throw UsageError("unsupported render format '" + format + "' (only dot)");
    return dispatch(doc, [&](const auto& d) { return render(d, name); });
}

Output cmd_gen(const GenRequest& req) {
    if (req.size == 0) throw UsageError("--size must be positive");
    Rng rng(req.seed);
    GenConfig cfg;
    cfg.seed = req.seed;
    cfg.max_size = req.size;
    SetDocument doc;
    if (req.kind == "complex") {
        doc.complexes.emplace_back("X", gen_complex(rng, cfg));
    } else if (req.kind == "map") {
        NameSource names("y");
        const auto x = gen_complex(rng, cfg);
        const auto f = gen_chain_map(rng, x, names);
        doc.complexes = {{"X", f.source}, {"M", f.middle}, {"Y", f.target}};
        doc.maps.emplace_back("f", NamedMap<FinSetInstance>{"X", "M", "Y", f});
    } else if (req.kind == "ses") {
        const auto s = gen_ses(rng, cfg);
        doc.complexes = {{"X", s.hor.source}, {"Y", s.hor.target}, {"Z", s.ver.source}};
        doc.hors.emplace_back("f", NamedHor<FinSetInstance>{"X", "Y", s.hor});
        doc.vers.emplace_back("g", NamedVer<FinSetInstance>{"Z", "Y", s.ver});
        doc.seses.emplace_back("s", NamedSES<FinSetInstance>{"f", "g", s});
    } else if (req.kind == "snake") {
        NamedSnake<FinSetInstance> s;
        s.strong = req.strong;
        if (req.strong) s.input = gen_strong_snake_input(rng, req.size);
        else s.input.weak = gen_snake_input(rng, req.size);
        doc.snakes.emplace_back("s", std::move(s));
    } else {
        throw UsageError("unknown --kind '" + req.kind + "' (complex, map, ses or snake)");
    }
    Output out;
    out.text = serialize_document(Document(doc));
    out.json = {{"kind", req.kind}, {"seed", req.seed}, {"size", req.size}, {"document", out.text}};
    return out;
}

}  // namespace acgw::cli
