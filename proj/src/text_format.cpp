#include "plethyra/text_format.hpp"

#include <sstream>

namespace plethyra {

namespace {

std::string join_signed(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (!terms[i].empty() && terms[i][0] == '-')
            out += "-" + terms[i].substr(1);
        else
            out += "+" + terms[i];
    }
    return out;
}

// A coefficient needs wrapping when it is a sum or carries a sign.
bool needs_parens(const std::string& s) {
    if (s.empty()) return false;
    if (s[0] == '-') return true;
    return s.find('+', 1) != std::string::npos || s.find('-', 1) != std::string::npos;
}

std::string monomial_text(const std::vector<std::string>& vars, const ExpVec& e) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string partition_text(const Partition& l) {
    std::string out = "p[";
    const auto& parts = l.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    out += "]";
    return out;
}

}  // namespace

std::string to_text(const LaurentPoly& p) {
    std::vector<std::string> terms;
    for (const auto& [e, c] : p.terms()) {
        std::string mono = monomial_text(p.vars(), e);
        if (mono.empty()) {
            terms.push_back(rat_to_string(c));
        } else if (c == 1) {
            terms.push_back(mono);
        } else if (c == -1) {
            terms.push_back("-" + mono);
        } else {
            terms.push_back(rat_to_string(c) + "*" + mono);
        }
    }
    return join_signed(terms);
}

std::string to_text(const SymFunc& f) {
    std::vector<std::string> terms;
    for (const auto& [l, c] : f.terms()) {
        std::string ct = to_text(c);
        if (l.empty()) {
            terms.push_back(ct);
            continue;
        }
        std::string pt = partition_text(l);
        if (ct == "1")
            terms.push_back(pt);
        else if (ct == "-1")
            terms.push_back("-" + pt);
        else if (needs_parens(ct))
            terms.push_back("(" + ct + ")*" + pt);
        else
            terms.push_back(ct + "*" + pt);
    }
    return join_signed(terms);
}

std::string to_text(const TruncatedSeries& s) {
    std::vector<std::pair<bool, std::string>> chunks;  // (negative, text)
    for (unsigned n = 0; n <= s.max_degree(); ++n) {
        const SymFunc& c = s.at(n);
        if (c.is_zero()) continue;
        std::string ct = to_text(c);
        bool negative = false;
        // Pull a plain leading minus out of single-term coefficients.
        if (!ct.empty() && ct[0] == '-' && !needs_parens(ct.substr(1))) {
            negative = true;
            ct = ct.substr(1);
        }
        if (n == 0) {
            chunks.emplace_back(negative, ct);
            continue;
        }
        std::string tpow = (n == 1) ? "t" : "t^" + std::to_string(n);
        if (ct == "1")
            chunks.emplace_back(negative, tpow);
        else if (needs_parens(ct))
            chunks.emplace_back(negative, "(" + ct + ") " + tpow);
        else
            chunks.emplace_back(negative, ct + " " + tpow);
    }
    if (chunks.empty()) return "0";
    std::string out = chunks[0].first ? "-" + chunks[0].second : chunks[0].second;
    for (std::size_t i = 1; i < chunks.size(); ++i)
        out += (chunks[i].first ? " - " : " + ") + chunks[i].second;
    return out;
}

}  // namespace plethyra
