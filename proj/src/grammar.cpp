#include "osculant/grammar.hpp"

#include <algorithm>

#include "osculant/partition.hpp"

namespace osculant::exper {

using combinat::Partition;
using combinat::SchubertProblemSpec;
using combinat::SkewShape;

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

} // namespace

SchubertProblemSpec parse_problem(const std::string& text) {
    std::string s = strip(text);
    if (s.rfind("GR(", 0) != 0 && s.rfind("gr(", 0) != 0)
        throw usage_error("problem must start with GR(k,n): '" + text + "'");
    size_t close = s.find(')');
    size_t comma = s.find(',');
    if (close == std::string::npos || comma == std::string::npos || comma > close)
        throw usage_error("bad problem header: '" + text + "'");
    int k, n;
    try {
        k = std::stoi(strip(s.substr(3, comma - 3)));
        n = std::stoi(strip(s.substr(comma + 1, close - comma - 1)));
    } catch (const std::exception&) {
        throw usage_error("bad k or n in '" + text + "'");
    }
    size_t colon = s.find(':', close);
    if (colon == std::string::npos) throw usage_error("missing ':' in '" + text + "'");

    std::vector<std::pair<Partition, int>> conditions;
    std::string rest = s.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
        size_t next = rest.find(',', pos);
        std::string piece = strip(rest.substr(pos, next == std::string::npos ? std::string::npos
                                                                             : next - pos));
        if (!piece.empty()) {
            int mult = 1;
            size_t caret = piece.find('^');
            std::string part_text = piece;
            if (caret != std::string::npos) {
                part_text = strip(piece.substr(0, caret));
                try {
                    mult = std::stoi(strip(piece.substr(caret + 1)));
                } catch (const std::exception&) {
                    throw usage_error("bad multiplicity in '" + piece + "'");
                }
            }
            try {
                conditions.emplace_back(Partition::from_text(part_text), mult);
            } catch (const domain_error& e) {
                throw usage_error(e.what());
            }
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (conditions.empty()) throw usage_error("no conditions in '" + text + "'");
    try {
        return SchubertProblemSpec(k, n, std::move(conditions));
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
}

SkewShape parse_skew(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return SkewShape(Partition::from_text(strip(text)));
        return SkewShape(Partition::from_text(strip(text.substr(0, slash))),
                         Partition::from_text(strip(text.substr(slash + 1))));
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
}

} // namespace osculant::exper
