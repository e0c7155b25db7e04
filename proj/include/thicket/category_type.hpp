#pragma once

#include <string>

#include "errors.hpp"
#include "root_system.hpp"

namespace thicket {

// t = 0 encodes infinity.
constexpr int kInfinity = 0;

inline std::string t_string(int t) { return t == kInfinity ? "inf" : std::to_string(t); }

inline int parse_t(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "oo") return kInfinity;
    if (s == "1") return 1;
    if (s == "2") return 2;
    if (s == "3") return 3;
    throw InvalidType("t must be 1, 2, 3 or inf, got '" + s + "'");
}

struct CategoryType {
    DynkinType delta;
    int r = 1;
    int t = 1;

    static CategoryType make(Series s, int n, int r, int t) {
        CategoryType ct{DynkinType{s, n}, r, t};
        ct.validate();
        return ct;
    }

    void validate() const {
        try {
            delta.validate();
        } catch (const InvalidDynkin& e) {
            throw InvalidType(e.what());
        }
        if (r < 1) throw InvalidType("r must be positive");
        const int n = delta.rank;
        bool ok = false;
        switch (delta.series) {
            case Series::A:
                ok = t == 1 || (t == 2 && n >= 3 && n % 2 == 1) || (t == kInfinity && n % 2 == 0);
                break;
            case Series::D:
                ok = t == 1 || t == 2 || (t == 3 && n == 4);
                break;
            case Series::E:
                ok = t == 1 || (t == 2 && n == 6);
                break;
        }
        if (!ok) throw InvalidType("(" + delta.name() + ", " + std::to_string(r) + ", " + t_string(t) + ") is not an admissible type");
    }

    /// (D_n even, r, 2) and (D_4, r, 3) fall outside the cox-conjugation criterion.
    bool excluded() const {
        return delta.series == Series::D && ((t == 2 && delta.rank % 2 == 0) || t == 3);
    }

    std::string str() const { return "(" + delta.name() + "," + std::to_string(r) + "," + t_string(t) + ")"; }
};

}  // namespace thicket
