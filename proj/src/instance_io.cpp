#include "dpfl/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "dpfl/errors.hpp"

namespace dpfl {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

Rational parse_field(const std::string& token, int line_no, int column) {
    try {
        return parse_rational(token);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no, column);
    }
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    bool have_params = false;
    bool have_agents = false;
    int params_line = 0;
    CostParams params;
    std::vector<Rational> agents;

    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokens_of(line);
        if (tokens.empty() || tokens.front().starts_with('#')) continue;

        if (tokens.front() == "params") {
            if (have_params) throw ParseError("duplicate params line", line_no, 1);
            if (tokens.size() == 3) {
                Rational b = parse_field(tokens[1], line_no, 2);
                params = CostParams::symmetric_params(b, parse_field(tokens[2], line_no, 3));
            } else if (tokens.size() == 4) {
                params.b_left = parse_field(tokens[1], line_no, 2);
                params.b_right = parse_field(tokens[2], line_no, 3);
                params.c = parse_field(tokens[3], line_no, 4);
            } else {
                throw ParseError("params line needs 2 or 3 numbers", line_no, 1);
            }
            have_params = true;
            params_line = line_no;
        } else if (tokens.front() == "agents") {
            if (have_agents) throw ParseError("duplicate agents line", line_no, 1);
            for (std::size_t i = 1; i < tokens.size(); ++i)
                agents.push_back(parse_field(tokens[i], line_no, static_cast<int>(i) + 1));
            have_agents = true;
        } else {
            throw ParseError("unknown directive '" + tokens.front() + "'", line_no, 1);
        }
    }

    if (!have_params) throw ParseError("missing params line");
    if (!have_agents) throw ParseError("missing agents line");
    (void)params_line;
    return normalize(std::move(agents), params);
}

std::string format_instance(const Instance& instance) {
    std::string out = "params ";
    const CostParams& p = instance.params;
    if (p.symmetric()) {
        out += to_fraction_string(p.b_left) + " " + to_fraction_string(p.c);
    } else {
        out += to_fraction_string(p.b_left) + " " + to_fraction_string(p.b_right) + " " +
               to_fraction_string(p.c);
    }
    out += "\nagents";
    for (const Rational& x : instance.locations) out += " " + to_fraction_string(x);
    out += "\n";
    return out;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

void save_instance(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write instance file '" + path + "'");
    out << format_instance(instance);
    if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace dpfl
