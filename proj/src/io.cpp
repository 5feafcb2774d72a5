#include "tristar/io.hpp"

#include <cstdio>

namespace tristar {

using nlohmann::json;

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

namespace {

void dump_rec(const json& j, std::string& out, int depth) {
    const std::string pad(2 * std::size_t(depth), ' ');
    const std::string pad_in(2 * std::size_t(depth + 1), ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t n = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++n) {
                out += pad_in;
                out += json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, depth + 1);
                if (n + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t n = 0; n < j.size(); ++n) {
                out += pad_in;
                dump_rec(j[n], out, depth + 1);
                if (n + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            return;
        }
        case json::value_t::number_float:
            out += fmt_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string fixed_dump(const json& j) {
    std::string out;
    dump_rec(j, out, 0);
    out += '\n';
    return out;
}

json matrix_json(const Mat& m) {
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            rrow.push_back(m(i, k).real());
            irow.push_back(m(i, k).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json state_json(const State& s) {
    json re = json::array(), im = json::array();
    for (const cplx& a : s.amp) {
        re.push_back(a.real());
        im.push_back(a.imag());
    }
    return json{{"label", s.label}, {"re", std::move(re)}, {"im", std::move(im)}};
}

State state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("label") || !j.contains("re") || !j.contains("im"))
        throw Error("BadFormat", "state JSON needs label/re/im fields");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != 16 || im.size() != 16)
        throw Error("BadFormat", "state JSON re/im must hold 16 amplitudes");
    State s;
    s.label = j.at("label").get<std::string>();
    s.amp.resize(16);
    for (std::size_t k = 0; k < 16; ++k)
        s.amp[k] = cplx(re[k].get<double>(), im[k].get<double>());
    return s;
}

std::vector<State> states_from_json(const json& j) {
    if (!j.is_array()) throw Error("BadFormat", "expected an array of state objects");
    std::vector<State> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(state_from_json(item));
    return out;
}

std::string spectrum_csv(const std::vector<LevelEntry>& levels) {
    std::string out = "energy,multiplicity,label\n";
    for (const auto& le : levels) {
        out += fmt_double(le.energy);
        out += ',';
        out += std::to_string(le.multiplicity);
        out += ',';
        out += le.label;
        out += '\n';
    }
    return out;
}

}  // namespace tristar
