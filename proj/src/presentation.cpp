#include "largeness/presentation.hpp"

#include <cctype>
#include <sstream>

namespace largeness {

int Presentation::gen_index(char c) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == c) return static_cast<int>(i);
    return -1;
}

long long Presentation::max_relator_length() const {
    long long m = 0;
    for (const Word& r : relators) m = std::max<long long>(m, static_cast<long long>(r.size()));
    return m;
}

Word Presentation::word_from_string(const std::string& s) const {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
        int g = gen_index(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (g < 0) throw std::invalid_argument(std::string("unknown generator letter '") + c + "'");
        w.push_back(upper ? inv_letter(g) : gen_letter(g));
    }
    return w;
}

std::string Presentation::word_to_string(const Word& w) const {
    std::string s;
    s.reserve(w.size());
    for (int l : w) {
        char c = gens.at(static_cast<size_t>(letter_gen(l)));
        s += letter_positive(l) ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return s;
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    bool have_gens = false;
    std::vector<std::pair<std::string, int>> raw_relators; // text + line number

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        if (line.rfind("gens:", 0) == 0) {
            if (have_gens) throw ParseError("duplicate 'gens:' line", lineno, 1);
            have_gens = true;
            std::istringstream gl(line.substr(5));
            std::string tok;
            while (gl >> tok) {
                if (tok.size() != 1 || !std::islower(static_cast<unsigned char>(tok[0])))
                    throw ParseError("generator names must be single lowercase letters, got '" +
                                         tok + "'",
                                     lineno, static_cast<int>(raw.find(tok)) + 1);
                if (p.gen_index(tok[0]) >= 0)
                    throw ParseError(std::string("duplicate generator '") + tok[0] + "'", lineno,
                                     static_cast<int>(raw.find(tok)) + 1);
                p.gens.push_back(tok[0]);
            }
            if (p.gens.empty()) throw ParseError("empty generator list", lineno, 1);
        } else if (line.rfind("rel:", 0) == 0) {
            raw_relators.emplace_back(strip(line.substr(4)), lineno);
        } else {
            throw ParseError("expected 'gens:' or 'rel:' line", lineno, 1);
        }
    }
    if (!have_gens) throw ParseError("missing 'gens:' line", lineno == 0 ? 1 : lineno, 1);

    for (const auto& [rtext, rline] : raw_relators) {
        Word w;
        for (size_t i = 0; i < rtext.size(); ++i) {
            char c = rtext[i];
            if (!std::isalpha(static_cast<unsigned char>(c)))
                throw ParseError(std::string("invalid character '") + c + "' in relator", rline,
                                 static_cast<int>(i) + 1);
            bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
            int g = p.gen_index(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            if (g < 0)
                throw ParseError(std::string("unknown generator letter '") + c + "'", rline,
                                 static_cast<int>(i) + 1);
            w.push_back(upper ? inv_letter(g) : gen_letter(g));
        }
        Word reduced = free_reduce(w);
        p.relator_trivial.push_back(reduced.empty());
        p.relator_length_sum += static_cast<long long>(reduced.size());
        p.relators.push_back(std::move(reduced));
    }
    return p;
}

std::string serialize(const Presentation& p) {
    std::string out = "gens:";
    for (char c : p.gens) {
        out += ' ';
        out += c;
    }
    out += '\n';
    for (const Word& r : p.relators) out += "rel: " + p.word_to_string(r) + "\n";
    return out;
}

} // namespace largeness
