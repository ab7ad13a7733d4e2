#include "catalog_data.hpp"

namespace braidsep::detail {

const char* embedded_catalog_json() {
  return R"json([
  {"name": "6_3",  "crossings": 6,  "word": "s1^-1 s2^2 s1^-2 s2",  "aliases": []},
  {"name": "7_5",  "crossings": 7,  "word": "s1^4 s2 s1^-1 s2^2",   "aliases": []},
  {"name": "8_7",  "crossings": 8,  "word": "s1^4 s2^-2 s1 s2^-1",  "aliases": []},
  {"name": "8_9",  "crossings": 8,  "word": "s1^-1 s2 s1^-3 s2^3",  "aliases": []},
  {"name": "8_10", "crossings": 8,  "word": "s1^-1 s2^2 s1^-2 s2^3", "aliases": []},
  {"name": "8_17", "crossings": 8,  "word": "s1^-1 s2^2 s1^-1 s2^2 s1^-2 s2",
   "aliases": ["s1^-1 s2 s1^-1 s2^2 s1^-2 s2", "s1^-2 s2 s1^-1 s2 s1^-1 s2^2"]},
  {"name": "9_6",  "crossings": 9,  "word": "s1^2 s2^2 s1^5 s2^-1", "aliases": []},
  {"name": "9_9",  "crossings": 9,  "word": "s1^3 s2^-1 s1^4 s2^2", "aliases": []},
  {"name": "10_5", "crossings": 10, "word": "s1^-2 s2 s1^-1 s2^6",  "aliases": []}
])json";
}

}  // namespace braidsep::detail
