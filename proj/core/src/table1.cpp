#include <helix/codec.hpp>

namespace helix
{
    namespace
    {
        // Twelve vertices, colors red/green/blue. Rows are kept exactly as
        // published, so a handful are 19 or 21 bases long.
        constexpr const char * table1_json = R"json(
{
  "n": 12,
  "k": 3,
  "length": null,
  "provenance": {"kind": "table1"},
  "entries": [
    {"vertex": 1, "color": 0, "sequence": "AAGGCAGGAACAGATCAACC"},
    {"vertex": 1, "color": 1, "sequence": "CGTTCTAAATAGGGTCGTGT"},
    {"vertex": 1, "color": 2, "sequence": "GATTAGACTTAGCTCGTCCG"},
    {"vertex": 2, "color": 0, "sequence": "CCACAATGTTATAATACCAC"},
    {"vertex": 2, "color": 1, "sequence": "ATCTTAGCACGATTCTCCTG"},
    {"vertex": 2, "color": 2, "sequence": "GTATATTCAAGTCTCGAGCC"},
    {"vertex": 3, "color": 0, "sequence": "TTTAGATGAACTCGCGTTC"},
    {"vertex": 3, "color": 1, "sequence": "TGGCACTCTTAAATCGAATA"},
    {"vertex": 3, "color": 2, "sequence": "TTGACAAGGAGGAGGATCCA"},
    {"vertex": 4, "color": 0, "sequence": "TCGGGGTAAAGTGATTACTG"},
    {"vertex": 4, "color": 1, "sequence": "ACCGATCAGTAACTAAATTC"},
    {"vertex": 4, "color": 2, "sequence": "CGATGAGCGCCCTGAGGGGC"},
    {"vertex": 5, "color": 0, "sequence": "CGCCGCGTAAAGGAGCCCGGT"},
    {"vertex": 5, "color": 1, "sequence": "ACTTATCTTATAAGCGCCGG"},
    {"vertex": 5, "color": 2, "sequence": "GGTCCAGCCTAACTTTTCAT"},
    {"vertex": 6, "color": 0, "sequence": "ATCTTGACCGCCAATATAAG"},
    {"vertex": 6, "color": 1, "sequence": "CCAATTGTGCCAGCACGTTA"},
    {"vertex": 6, "color": 2, "sequence": "AGATACCCGTCTGGTTCACC"},
    {"vertex": 7, "color": 0, "sequence": "TCGCTGCGATTTCGATTGTG"},
    {"vertex": 7, "color": 1, "sequence": "CCTCAGCGCCTCCGCGTAGC"},
    {"vertex": 7, "color": 2, "sequence": "GCTCATCGTCGAAGCGTAGA"},
    {"vertex": 8, "color": 0, "sequence": "GTTCAATCCTTGCAGCCTCG"},
    {"vertex": 8, "color": 1, "sequence": "CGTATAGAGCTGCACCATAC"},
    {"vertex": 8, "color": 2, "sequence": "CGCAGGCAATAAGGGATTG"},
    {"vertex": 9, "color": 0, "sequence": "CTCCGATTAATGCACATTTA"},
    {"vertex": 9, "color": 1, "sequence": "GTTTCGCGGATAAGAAGTCGA"},
    {"vertex": 9, "color": 2, "sequence": "GCGTCCTAGGATCGTTCATT"},
    {"vertex": 10, "color": 0, "sequence": "TTCCCTTTCCGGACTCTTCG"},
    {"vertex": 10, "color": 1, "sequence": "GGCTACTTCTTGTTACTCCA"},
    {"vertex": 10, "color": 2, "sequence": "TAACTGAATCGTCCAATCAC"},
    {"vertex": 11, "color": 0, "sequence": "CAAACCTGCTACGTCGCCAAT"},
    {"vertex": 11, "color": 1, "sequence": "GGCTCCGAAACGATGGAAGT"},
    {"vertex": 11, "color": 2, "sequence": "TTCTTGGGGCTTGGGCTATA"},
    {"vertex": 12, "color": 0, "sequence": "CTCACAGAATGCTGCGCAAA"},
    {"vertex": 12, "color": 1, "sequence": "TAAATTTACTTCGGGACACC"},
    {"vertex": 12, "color": 2, "sequence": "TCTCAACAGCGTCTGGAAGT"}
  ]
})json";
    }

    auto builtin_table1() -> const Codebook &
    {
        static const Codebook table = codebook_from_json(table1_json);
        return table;
    }
}
