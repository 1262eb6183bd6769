#include "liaset/ksum.hpp"

#include <charconv>
#include <sstream>

namespace liaset::ksum {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

u64 parse_mult(std::string_view s, std::size_t line_no) {
    u64 v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v == 0)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": multiplicity must be a positive integer");
    return v;
}

}  // namespace

template <typename T>
KsumInstance<T> parse_ksum(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    // Header: first non-blank line. List lines after it are positional, so a
    // blank one is an empty list rather than noise.
    auto next_nonblank = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!split_ws(line).empty()) return true;
        }
        return false;
    };
    auto next_raw = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++line_no;
        return true;
    };

    if (!next_nonblank()) throw std::invalid_argument("empty instance text");
    auto head = split_ws(line);
    if (head.size() != 2)
        throw std::invalid_argument("line 1: expected \"k target\"");
    std::size_t k = 0;
    {
        u64 kv = parse_mult(head[0], 1);
        k = static_cast<std::size_t>(kv);
        if (k > 64) throw std::invalid_argument("line 1: unreasonable list count");
    }
    KsumInstance<T> out;
    try {
        out.target = ValueOps<T>::parse(head[1]);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line 1: bad target: " + std::string(e.what()));
    }

    for (std::size_t j = 0; j < k; ++j) {
        if (!next_raw())
            throw std::invalid_argument("expected " + std::to_string(k) + " value lines, got " +
                                        std::to_string(j));
        KsumList<T> list;
        for (const std::string& tok : split_ws(line)) {
            std::string_view sv = tok;
            u64 mult = 1;
            if (auto colon = sv.find(':'); colon != std::string_view::npos) {
                mult = parse_mult(sv.substr(colon + 1), line_no);
                sv = sv.substr(0, colon);
            }
            T value;
            try {
                value = ValueOps<T>::parse(sv);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
            }
            list.add(std::move(value), mult);
        }
        std::vector<T> sorted = list.values;
        std::sort(sorted.begin(), sorted.end());
        if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
            throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate value " +
                                        ValueOps<T>::str(*dup));
        out.lists.push_back(std::move(list));
    }
    if (next_nonblank()) throw std::invalid_argument("trailing content after the last list line");
    return out;
}

template <typename T>
std::string format_ksum(const KsumInstance<T>& in) {
    std::string out = std::to_string(in.k()) + " " + ValueOps<T>::str(in.target) + "\n";
    for (const auto& list : in.lists) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) out += " ";
            out += ValueOps<T>::str(list.values[i]);
            if (list.mults[i] != 1) out += ":" + std::to_string(list.mults[i]);
        }
        out += "\n";
    }
    return out;
}

template KsumInstance<i128> parse_ksum<i128>(const std::string&);
template KsumInstance<BigInt> parse_ksum<BigInt>(const std::string&);
template std::string format_ksum<i128>(const KsumInstance<i128>&);
template std::string format_ksum<BigInt>(const KsumInstance<BigInt>&);

}  // namespace liaset::ksum
