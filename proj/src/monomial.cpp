#include "qovar/monomial.hpp"

namespace qovar::indet {

namespace {
const char* kVarNames[8] = {"x1", "x2", "y1", "y2", "z1", "z2", "t1", "t2"};
const char* kParamNames[4] = {"a", "b", "c", "d"};
}  // namespace

std::string name(int v) {
    if (is_form_coeff(v)) {
        std::string s = "a[";
        s += char('0' + ((v >> 3) & 1));
        s += char('0' + ((v >> 2) & 1));
        s += char('0' + ((v >> 1) & 1));
        s += char('0' + (v & 1));
        s += "]";
        return s;
    }
    if (is_var(v)) return kVarNames[v - kVar];
    if (is_param(v)) return kParamNames[v - kParam];
    throw Error("indeterminate index out of range");
}

int from_name(const std::string& s) {
    if (s.size() == 7 && s.compare(0, 2, "a[") == 0 && s.back() == ']') {
        int idx = 0;
        for (int i = 0; i < 4; ++i) {
            char c = s[2 + i];
            if (c != '0' && c != '1') throw Error("bad form coefficient '" + s + "'");
            idx = idx * 2 + (c - '0');
        }
        return idx;
    }
    for (int i = 0; i < 8; ++i)
        if (s == kVarNames[i]) return kVar + i;
    for (int i = 0; i < 4; ++i)
        if (s == kParamNames[i]) return kParam + i;
    throw Error("unknown indeterminate '" + s + "'");
}

}  // namespace qovar::indet
