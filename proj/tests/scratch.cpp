#include <cstdio>
#include <vector>
#include "wordbench/search.hpp"
#include "wordbench/digraph.hpp"

using namespace wb;

static void probe(const char* label, const char* tname, std::vector<Word> ctx,
                  std::vector<Word> cands, size_t claimed) {
    auto base = AvoidanceSpec(t_set(tname)).extended(ctx);
    size_t mx = 0;
    std::printf("%s claimed=%zu:", label, claimed);
    for (auto& e : cands) {
        auto out = longest_avoiding(base.extended(e), 250);
        if (out.max_length > mx) mx = out.max_length;
        std::printf(" %zu%s", out.max_length, out.status == SearchStatus::Exhausted ? "" : "C");
    }
    std::printf("  max=%zu\n", mx);
}

int main() {
    probe("T7+0020 six len-4", "T7", {"0020"}, {"0012","0120","1202","2001","2012","2020"}, 17);
    probe("T7+0201 six len-3", "T7", {"0201"}, {"001","012","020","120","200","202"}, 96);
    probe("T1+001 ten len-5", "T1", {"001"},
          {"00201","01002","01020","02002","02010","10020","10200","20020","20100","20102"}, 118);
    probe("T5+100 six len-4", "T5", {"100"}, {"0101","0120","1012","1200","1201","2001"}, 18);
    probe("T3+102 eleven len-5", "T3", {"102"},
          {"01012","01201","01202","02010","02012","10120","12010","12020","20101","20120","20201"}, 63);
    return 0;
}
