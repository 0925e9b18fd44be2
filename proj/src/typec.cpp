#include "plactic/typec.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace plactic::typec {

/*
  The congruence is generated by four families of moves on the signed
  alphabet. With bar(x) = -x and < the alphabet order:

    (1) y x z ~ y z x  and  x z y ~ z x y     for x < y < z, x != bar(z)
    (2) y x x ~ x y x  and  y y x ~ y x y     for x < y,     x != bar(y)
    (3) i,-i,x ~ -(i+1),i+1,x  and  x,i,-i ~ x,-(i+1),i+1
                                              for i < rank, |x| <= i
    (4) a strictly decreasing word is congruent to itself with all its
        admissible (i, -i) pairs erased.

  Families (1) and (2) are exactly the sign-constrained Knuth exchanges;
  every instance swaps two adjacent letters of a three-letter window, so
  the window scan below only has to decide, per window, whether the first
  or the last two letters may trade places.
*/

SignedWord parse_signed_word(const std::string& csv, int rank) {
    SignedWord w;
    w.rank = rank;
    std::size_t i = 0;
    while (i < csv.size()) {
        std::size_t j = csv.find(',', i);
        if (j == std::string::npos)
            j = csv.size();
        const std::string tok = csv.substr(i, j - i);
        if (tok.empty())
            throw domain_error("signed word: empty token");
        int v;
        try {
            std::size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw domain_error("signed word: bad token '" + tok + "'");
        }
        if (v == 0 || std::abs(v) > rank)
            throw domain_error("signed word: letter out of range");
        w.letters.push_back(v);
        i = j + 1;
        if (j == csv.size())
            break;
        if (i == csv.size())
            throw domain_error("signed word: trailing comma");
    }
    return w;
}

std::string to_string(const SignedWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(w.letters[i]);
    }
    return s;
}

int order_key(int letter, int rank) {
    return letter < 0 ? rank + letter : rank + letter - 1;
}

bool strictly_decreasing(const SignedWord& w) {
    for (std::size_t i = 1; i < w.letters.size(); ++i)
        if (order_key(w.letters[i], w.rank) >= order_key(w.letters[i - 1], w.rank))
            return false;
    return true;
}

std::vector<int> signed_weight(const SignedWord& w) {
    std::vector<int> mu(w.rank, 0);
    for (int l : w.letters)
        mu[std::abs(l) - 1] += l > 0 ? 1 : -1;
    return mu;
}

SignedWord erase_pairs(const SignedWord& w) {
    if (!strictly_decreasing(w))
        throw not_decreasing("erase_pairs: word is not strictly decreasing");
    const int k = static_cast<int>(w.letters.size());
    std::vector<char> dead(k, 0);
    for (int p = 0; p < k; ++p) {
        const int i = w.letters[p];
        if (i <= 0)
            continue;
        for (int q = p + 1; q < k; ++q)
            if (w.letters[q] == -i && q - p < k + i - w.rank) {
                dead[p] = dead[q] = 1;
                break; // letters are distinct in a decreasing word
            }
    }
    SignedWord out;
    out.rank = w.rank;
    for (int p = 0; p < k; ++p)
        if (!dead[p])
            out.letters.push_back(w.letters[p]);
    return out;
}

namespace {

bool lt(int a, int b, int rank) {
    return order_key(a, rank) < order_key(b, rank);
}

// window (a,b,c): may the last two letters trade places?
bool swap_last_ok(int a, int b, int c, int rank) {
    if (lt(b, a, rank) && lt(a, c, rank) && b != -c)
        return true; // y x z ~ y z x
    if (lt(c, a, rank) && lt(a, b, rank) && c != -b)
        return true; // y z x ~ y x z
    if (a == b && lt(c, a, rank) && c != -a)
        return true; // y y x ~ y x y
    if (a == c && lt(b, a, rank) && b != -a)
        return true; // y x y ~ y y x
    return false;
}

// window (a,b,c): may the first two letters trade places?
bool swap_first_ok(int a, int b, int c, int rank) {
    if (lt(a, c, rank) && lt(c, b, rank) && a != -b)
        return true; // x z y ~ z x y
    if (lt(b, c, rank) && lt(c, a, rank) && b != -a)
        return true; // z x y ~ x z y
    if (b == c && lt(b, a, rank) && b != -a)
        return true; // y x x ~ x y x
    if (a == c && lt(a, b, rank) && a != -b)
        return true; // x y x ~ y x x
    return false;
}

} // namespace

std::vector<SignedWord> neighbors(const SignedWord& w) {
    std::set<SignedWord> out;
    const int n = w.rank;
    const int len = static_cast<int>(w.letters.size());

    for (int p = 0; p + 2 < len; ++p) {
        const int a = w.letters[p], b = w.letters[p + 1], c = w.letters[p + 2];
        if (swap_last_ok(a, b, c, n)) {
            SignedWord v = w;
            std::swap(v.letters[p + 1], v.letters[p + 2]);
            out.insert(std::move(v));
        }
        if (swap_first_ok(a, b, c, n)) {
            SignedWord v = w;
            std::swap(v.letters[p], v.letters[p + 1]);
            out.insert(std::move(v));
        }
        // contraction beside a small letter, both orientations
        if (a >= 1 && a < n && b == -a && std::abs(c) <= a) {
            SignedWord v = w;
            v.letters[p] = -(a + 1);
            v.letters[p + 1] = a + 1;
            out.insert(std::move(v));
        }
        if (a < 0 && -a >= 2 && -a <= n && b == -a && std::abs(c) <= -a - 1) {
            SignedWord v = w;
            v.letters[p] = -a - 1;
            v.letters[p + 1] = -(-a - 1);
            out.insert(std::move(v));
        }
        if (b >= 1 && b < n && c == -b && std::abs(a) <= b) {
            SignedWord v = w;
            v.letters[p + 1] = -(b + 1);
            v.letters[p + 2] = b + 1;
            out.insert(std::move(v));
        }
        if (b < 0 && -b >= 2 && -b <= n && c == -b && std::abs(a) <= -b - 1) {
            SignedWord v = w;
            v.letters[p + 1] = -b - 1;
            v.letters[p + 2] = -(-b - 1);
            out.insert(std::move(v));
        }
    }

    if (strictly_decreasing(w)) {
        SignedWord erased = erase_pairs(w);
        if (erased != w)
            out.insert(std::move(erased));
        // reinsert one pair; positions are forced by the ordering
        for (int i = 1; i <= n; ++i) {
            bool present = false;
            for (int l : w.letters)
                if (std::abs(l) == i)
                    present = true;
            if (present)
                continue;
            SignedWord v;
            v.rank = n;
            v.letters = w.letters;
            auto pos_plus = std::find_if(v.letters.begin(), v.letters.end(),
                                         [&](int l) { return lt(l, i, n); });
            v.letters.insert(pos_plus, i);
            auto pos_minus = std::find_if(v.letters.begin(), v.letters.end(),
                                          [&](int l) { return lt(l, -i, n); });
            v.letters.insert(pos_minus, -i);
            if (erase_pairs(v) == w)
                out.insert(std::move(v));
        }
    }

    return {out.begin(), out.end()};
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::True:
        return "true";
    case Verdict::False:
        return "false";
    default:
        return "unknown";
    }
}

Verdict congruent(const SignedWord& a, const SignedWord& b, std::size_t max_len,
                  std::size_t max_states) {
    if (a.rank != b.rank)
        throw domain_error("congruent: rank mismatch");
    if (signed_weight(a) != signed_weight(b))
        return Verdict::False;
    if (a == b)
        return Verdict::True;

    std::set<SignedWord> seen_a{a}, seen_b{b};
    std::deque<SignedWord> front_a{a}, front_b{b};
    bool truncated = false;

    auto expand = [&](std::deque<SignedWord>& frontier, std::set<SignedWord>& mine,
                      const std::set<SignedWord>& other) -> bool {
        std::size_t count = frontier.size();
        while (count-- > 0) {
            SignedWord cur = frontier.front();
            frontier.pop_front();
            for (SignedWord& next : neighbors(cur)) {
                if (next.letters.size() > max_len) {
                    truncated = true;
                    continue;
                }
                if (other.count(next))
                    return true;
                if (mine.insert(next).second)
                    frontier.push_back(std::move(next));
            }
        }
        return false;
    };

    while (!front_a.empty() || !front_b.empty()) {
        if (seen_a.size() + seen_b.size() > max_states)
            return Verdict::Unknown;
        auto& smaller = (front_b.empty() || (!front_a.empty() && front_a.size() <= front_b.size()))
                            ? front_a
                            : front_b;
        if (&smaller == &front_a) {
            if (expand(front_a, seen_a, seen_b))
                return Verdict::True;
        } else {
            if (expand(front_b, seen_b, seen_a))
                return Verdict::True;
        }
    }
    return truncated ? Verdict::Unknown : Verdict::False;
}

} // namespace plactic::typec
