#include <string_view>

namespace symcut {

// The printed classification. Cells hold squared coefficients of π at ε = 1:
// a cell "n - 2" means i(M) = π·(n − 2)^{1/2}.
std::string_view builtin_catalog_json() {
  static constexpr std::string_view kJson = R"json({
  "schema_version": 1,
  "spaces": [
    {
      "table": "8.1", "kind": "I", "label": "A I", "space": "SU($n)/SO($n)",
      "params": ["n"], "valid": ["n>=2"], "defaults": {"n": "2..8"},
      "delta": "A:n-1", "sigma": "A:n-1", "halved": false,
      "rows": [
        {"gamma": "Z:n", "i": "1/2*n - 1/2", "d": "1/6*n^2 - 1/6"},
        {"gamma": "Z:1/2*n", "when": ["n>=6"], "i": "n - 2", "d": "unknown"},
        {"gamma": "Z:2",
         "i": [{"when": ["n==4"], "value": "2"}, {"when": ["n==6"], "value": "9/2"},
               {"when": ["n>=8"], "value": "n"}],
         "d": [{"when": ["n%4==0"], "value": "3/8*n^2"},
               {"when": ["n%4!=0"], "value": "3/8*n^2 - 1/2*n"}]},
        {"gamma": "otherwise", "i": "n", "d": "unknown"}
      ]
    },
    {
      "table": "8.1", "kind": "I", "label": "A II", "space": "SU(${2*n})/Sp($n)",
      "params": ["n"], "valid": ["n>=2"], "defaults": {"n": "2..4"},
      "delta": "A:2*n-1", "sigma": "A:n-1", "halved": true,
      "rows": [
        {"gamma": "Z:n", "i": "2*n - 2", "d": "2/3*n^2 - 2/3"},
        {"gamma": "Z:1/2*n", "when": ["n>=6"], "i": "4*n - 8", "d": "unknown"},
        {"gamma": "Z:2",
         "i": [{"when": ["n==4"], "value": "8"}, {"when": ["n==6"], "value": "18"},
               {"when": ["n>=8"], "value": "4*n"}],
         "d": [{"when": ["n%4==0"], "value": "3/2*n^2"},
               {"when": ["n%4!=0"], "value": "3/2*n^2 - 2*n"}]},
        {"gamma": "otherwise", "i": "4*n", "d": "unknown"}
      ]
    },
    {
      "table": "8.1", "kind": "I", "label": "A III", "space": "Gr_{$p,$q}(C)",
      "params": ["p", "q"], "valid": ["p>=1", "q>p"], "defaults": {"p": "1..2", "q": "3"},
      "delta": "A:p+q-1", "sigma": "BC:p", "halved": false, "rows": []
    },
    {
      "table": "8.1", "kind": "I", "label": "A III", "space": "Gr_{$p,$p}(C)",
      "params": ["p"], "valid": ["p>=2"], "defaults": {"p": "2..4"},
      "delta": "A:2*p-1", "sigma": "C:p", "halved": false,
      "rows": [
        {"gamma": "Z:2",
         "i": [{"when": ["p<=3"], "value": "1/2*p^2"}, {"when": ["p>=4"], "value": "2*p"}],
         "d": [{"when": ["p%2==0"], "value": "p^2"},
               {"when": ["p%2!=0"], "value": "p^2 - 1/2*p"}]}
      ]
    },
    {
      "table": "8.1", "kind": "I", "label": "C I", "space": "Sp($n)/U($n)",
      "params": ["n"], "valid": ["n>=3"], "defaults": {"n": "3..5"},
      "delta": "C:n", "sigma": "C:n", "halved": false,
      "rows": [
        {"gamma": "Z:2",
         "i": [{"when": ["n==3"], "value": "3"}, {"when": ["n>=4"], "value": "n + 1"}],
         "d": [{"when": ["n%2==0"], "value": "1/2*n^2 + 1/2*n"},
               {"when": ["n%2!=0"], "value": "1/2*n^2 + 1/4*n - 1/4"}]}
      ]
    },
    {
      "table": "8.1", "kind": "I", "label": "C II", "space": "Gr_{$p,$q}(H)",
      "params": ["p", "q"], "valid": ["p>=1", "q>p"], "defaults": {"p": "1..2", "q": "3"},
      "delta": "C:p+q", "sigma": "BC:p", "halved": true, "rows": []
    },
    {
      "table": "8.1", "kind": "I", "label": "C II", "space": "Gr_{$p,$p}(H)",
      "params": ["p"], "valid": ["p>=2"], "defaults": {"p": "2..4"},
      "delta": "C:2*p", "sigma": "C:p", "halved": true,
      "reading": "d(M) branches printed for n even/odd are taken on p, the rank of Sigma = C_p",
      "rows": [
        {"gamma": "Z:2",
         "i": [{"when": ["p<=3"], "value": "p^2 + 1/2*p"}, {"when": ["p>=4"], "value": "4*p + 2"}],
         "d": [{"when": ["p%2==0"], "value": "2*p^2 + p"},
               {"when": ["p%2!=0"], "value": "2*p^2 - 1/2"}]}
      ]
    },
    {
      "table": "8.1", "kind": "I", "label": "BD I", "space": "Gr_{$p,$q}(R)",
      "params": ["p", "q"], "valid": ["p>=3", "q>p"], "defaults": {"p": "3", "q": "5"},
      "delta": "so:p+q", "sigma": "B:p", "halved": false,
      "rows": [
        {"gamma": "Z:2", "i": "1/2*p + 1/2*q - 1", "d": "1/2*p^2 + 1/2*p*q - p"}
      ]
    },
    {
      "table": "8.1", "kind": "I", "label": "BD I", "space": "S^$q",
      "params": ["q"], "valid": ["q>=2"], "defaults": {"q": "3..5"},
      "delta": "so:q+1", "sigma": "A:1", "halved": true, "halved_when": ["q>=3"],
      "rows": [
        {"gamma": "Z:2", "i": "1/2*q - 1/2", "d": "1/2*q - 1/2"}
      ]
    },
    {
      "table": "8.1", "kind": "I", "label": "BD I", "space": "Gr_{$p,$p}(R)",
      "params": ["p"], "valid": ["p>=4"], "defaults": {"p": "4..6"},
      "delta": "D:p", "sigma": "D:p", "halved": false,
      "rows": [
        {"gamma": "full", "i": "p - 1",
         "d": [{"when": ["p%2==0"], "value": "1/2*p^2 - 1/2*p"},
               {"when": ["p%2!=0"], "value": "1/2*p^2 - 3/4*p + 1/4"}]},
        {"gamma": "gen=e1", "i": "p - 1", "d": "p^2 - p"},
        {"gamma": "spinor", "when": ["p%2==0"],
         "i": [{"when": ["p<=6"], "value": "1/4*p^2 - 1/4*p"}, {"when": ["p>=8"], "value": "2*p - 2"}],
         "d": [{"when": ["p<=6"], "value": "4*p - 4"}, {"when": ["p>=8"], "value": "1/2*p^2 - 1/2*p"}]}
      ]
    },
    {
      "table": "8.1", "kind": "I", "label": "D III", "space": "SO(${2*n})/U($n)",
      "params": ["n"], "valid": ["n>=5", "n%2!=0"], "defaults": {"n": "5..7"},
      "delta": "D:n", "sigma": "BC:1/2*n - 1/2", "halved": false, "rows": []
    },
    {
      "table": "8.1", "kind": "I", "label": "D III", "space": "SO(${2*n})/U($n)",
      "params": ["n"], "valid": ["n>=4", "n%2==0"], "defaults": {"n": "4..6"},
      "delta": "D:n", "sigma": "C:1/2*n", "halved": false,
      "rows": [
        {"gamma": "Z:2",
         "i": [{"when": ["n<=6"], "value": "1/4*n^2 - 1/4*n"}, {"when": ["n>=8"], "value": "2*n - 2"}],
         "d": [{"when": ["n%4==0"], "value": "1/2*n^2 - 1/2*n"},
               {"when": ["n%4!=0"], "value": "1/2*n^2 - n + 1/2"}]}
      ]
    },
    {
      "table": "8.1", "kind": "I", "label": "E I", "space": "(e6, sp(4))",
      "params": [], "valid": [], "defaults": {},
      "delta": "E6", "sigma": "E6", "halved": false,
      "rows": [{"gamma": "Z:3", "i": "8", "d": "16"}]
    },
    {
      "table": "8.1", "kind": "I", "label": "E IV", "space": "(e6, f4)",
      "params": [], "valid": [], "defaults": {},
      "delta": "E6", "sigma": "A:2", "halved": true,
      "rows": [{"gamma": "Z:3", "i": "8", "d": "32/3"}]
    },
    {
      "table": "8.1", "kind": "I", "label": "E V", "space": "(e7, su(8))",
      "params": [], "valid": [], "defaults": {},
      "delta": "E7", "sigma": "E7", "halved": false,
      "rows": [{"gamma": "Z:2", "i": "27/2", "d": "63/2"}]
    },
    {
      "table": "8.1", "kind": "I", "label": "E VII", "space": "(e7, e6+R)",
      "params": [], "valid": [], "defaults": {},
      "delta": "E7", "sigma": "C:3", "halved": false,
      "rows": [{"gamma": "Z:2", "i": "27/2", "d": "27"}]
    },
    {
      "table": "8.2", "kind": "II", "label": "SU(n)", "space": "SU($n)",
      "params": ["n"], "valid": ["n>=2"], "defaults": {"n": "2..8"},
      "delta": "A:n-1", "sigma": "A:n-1",
      "rows": [
        {"gamma": "Z:n", "i": "n - 1", "d": "1/3*n^2 - 1/3"},
        {"gamma": "Z:1/2*n", "when": ["n>=6"], "i": "2*n - 4", "d": "unknown"},
        {"gamma": "Z:2",
         "i": [{"when": ["n==4"], "value": "4"}, {"when": ["n==6"], "value": "9"},
               {"when": ["n>=8"], "value": "2*n"}],
         "d": [{"when": ["n%4==0"], "value": "3/4*n^2"},
               {"when": ["n%4!=0"], "value": "3/4*n^2 - n"}]},
        {"gamma": "otherwise", "i": "2*n", "d": "unknown"}
      ]
    },
    {
      "table": "8.2", "kind": "II", "label": "Spin(2n+1)", "space": "Spin(${2*n+1})",
      "params": ["n"], "valid": ["n>=2"], "defaults": {"n": "2..4"},
      "delta": "B:n", "sigma": "B:n",
      "rows": [{"gamma": "Z:2", "i": "2*n - 1", "d": "2*n^2 - n"}]
    },
    {
      "table": "8.2", "kind": "II", "label": "Sp(n)", "space": "Sp($n)",
      "params": ["n"], "valid": ["n>=3"], "defaults": {"n": "3..5"},
      "delta": "C:n", "sigma": "C:n",
      "rows": [
        {"gamma": "Z:2",
         "i": [{"when": ["n==3"], "value": "6"}, {"when": ["n>=4"], "value": "2*n + 2"}],
         "d": [{"when": ["n%2==0"], "value": "n^2 + n"},
               {"when": ["n%2!=0"], "value": "n^2 + 1/2*n - 1/2"}]}
      ]
    },
    {
      "table": "8.2", "kind": "II", "label": "Spin(2n)", "space": "Spin(${2*n})",
      "params": ["n"], "valid": ["n>=4"], "defaults": {"n": "4..6"},
      "delta": "D:n", "sigma": "D:n",
      "rows": [
        {"gamma": "full", "i": "2*n - 2",
         "d": [{"when": ["n%2==0"], "value": "n^2 - n"},
               {"when": ["n%2!=0"], "value": "n^2 - 3/2*n + 1/2"}]},
        {"gamma": "gen=e1", "i": "2*n - 2", "d": "2*n^2 - 2*n"},
        {"gamma": "spinor", "when": ["n%2==0"],
         "i": [{"when": ["n<=6"], "value": "1/2*n^2 - 1/2*n"}, {"when": ["n>=8"], "value": "4*n - 4"}],
         "d": [{"when": ["n<=6"], "value": "8*n - 8"}, {"when": ["n>=8"], "value": "n^2 - n"}]}
      ]
    },
    {
      "table": "8.2", "kind": "II", "label": "E6", "space": "E6",
      "params": [], "valid": [], "defaults": {},
      "delta": "E6", "sigma": "E6",
      "rows": [{"gamma": "Z:3", "i": "16", "d": "32"}]
    },
    {
      "table": "8.2", "kind": "II", "label": "E7", "space": "E7",
      "params": [], "valid": [], "defaults": {},
      "delta": "E7", "sigma": "E7",
      "rows": [{"gamma": "Z:2", "i": "27", "d": "63"}]
    }
  ]
})json";
  return kJson;
}

}  // namespace symcut
