#include "schur3/corpus.hpp"

namespace schur3 {

std::vector<Diagram3> builtin_corpus() {
    std::vector<Diagram3> corpus;
    for (int t = 0; t < kNumColumnTypes; ++t) {
        Diagram3 d;
        d.m[t] = 1;
        corpus.push_back(d);
    }
    for (const char* text : {"1,0,0,1,0,0,1", "0,0,0,1,1,0,0", "0,0,0,1,1,1,0",
                             "1,1,1,0,0,0,0", "2,0,0,0,0,0,0", "0,0,0,0,0,0,2"})
        corpus.push_back(parse_diagram(text));
    return corpus;
}

}  // namespace schur3
