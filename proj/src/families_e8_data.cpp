#include "families_data.hpp"

namespace pencil::fdata {
namespace {

const BlockRow kABlocks[] = {
    {"e1", 2},
    {"e2", 6},
    {"e3", 4},
    {"e4", 2},
};
const BlockRow kBBlocks[] = {
    {"f1", 4},
    {"f2", 3},
    {"f3", 5},
    {"f4", 3},
    {"f5", 1},
};

const CrossRel kRels[] = {
    {"f1[1,1]", "e3[1,1]", "0", "1", "", ""},
    {"f1[1,1]", "e3[1,2]", "0", "1", "", ""},
    {"f1[1,1]", "e3[1,3]", "0", "1", "", ""},
    {"f1[1,1]", "e3[1,4]", "0", "1", "", ""},
    {"f1[1,1]", "e3[2,1]", "0", "1", "", ""},
    {"f1[1,1]", "e3[2,2]", "0", "1", "", ""},
    {"f1[1,1]", "e3[2,3]", "0", "1", "", ""},
    {"f1[1,1]", "e3[2,4]", "0", "1", "", ""},
    {"f1[1,1]", "e3[3,1]", "0", "1", "", ""},
    {"f1[1,1]", "e3[3,2]", "0", "1", "", ""},
    {"f1[1,1]", "e3[3,3]", "0", "1", "", ""},
    {"f1[1,1]", "e3[3,4]", "0", "1", "", ""},
    {"f1[1,1]", "e3[4,1]", "0", "1", "", ""},
    {"f1[1,1]", "e3[4,2]", "0", "1", "", ""},
    {"f1[1,1]", "e3[4,3]", "0", "1", "", ""},
    {"f1[1,1]", "e3[4,4]", "0", "1", "", ""},
    {"f1[1,2]", "e3[1,1]", "0", "1", "", ""},
    {"f1[1,2]", "e3[1,2]", "0", "1", "", ""},
    {"f1[1,2]", "e3[1,3]", "0", "1", "", ""},
    {"f1[1,2]", "e3[1,4]", "0", "1", "", ""},
    {"f1[1,2]", "e3[2,1]", "0", "1", "", ""},
    {"f1[1,2]", "e3[2,2]", "0", "1", "", ""},
    {"f1[1,2]", "e3[2,3]", "0", "1", "", ""},
    {"f1[1,2]", "e3[2,4]", "0", "1", "", ""},
    {"f1[1,2]", "e3[3,1]", "0", "1", "", ""},
    {"f1[1,2]", "e3[3,2]", "0", "1", "", ""},
    {"f1[1,2]", "e3[3,3]", "0", "1", "", ""},
    {"f1[1,2]", "e3[3,4]", "0", "1", "", ""},
    {"f1[1,2]", "e3[4,1]", "0", "1", "", ""},
    {"f1[1,2]", "e3[4,2]", "0", "1", "", ""},
    {"f1[1,2]", "e3[4,3]", "0", "1", "", ""},
    {"f1[1,2]", "e3[4,4]", "0", "1", "", ""},
    {"f1[1,3]", "e3[1,1]", "0", "1", "", ""},
    {"f1[1,3]", "e3[1,2]", "0", "1", "", ""},
    {"f1[1,3]", "e3[1,3]", "0", "1", "", ""},
    {"f1[1,3]", "e3[1,4]", "0", "1", "", ""},
    {"f1[1,3]", "e3[2,1]", "0", "1", "", ""},
    {"f1[1,3]", "e3[2,2]", "0", "1", "", ""},
    {"f1[1,3]", "e3[2,3]", "0", "1", "", ""},
    {"f1[1,3]", "e3[2,4]", "0", "1", "", ""},
    {"f1[1,3]", "e3[3,1]", "0", "1", "", ""},
    {"f1[1,3]", "e3[3,2]", "0", "1", "", ""},
    {"f1[1,3]", "e3[3,3]", "0", "1", "", ""},
    {"f1[1,3]", "e3[3,4]", "0", "1", "", ""},
    {"f1[1,3]", "e3[4,1]", "0", "1", "", ""},
    {"f1[1,3]", "e3[4,2]", "0", "1", "", ""},
    {"f1[1,3]", "e3[4,3]", "0", "1", "", ""},
    {"f1[1,3]", "e3[4,4]", "0", "1", "", ""},
    {"f1[1,4]", "e3[1,1]", "0", "1", "", ""},
    {"f1[1,4]", "e3[1,2]", "0", "1", "", ""},
    {"f1[1,4]", "e3[1,3]", "0", "1", "", ""},
    {"f1[1,4]", "e3[1,4]", "0", "1", "", ""},
    {"f1[1,4]", "e3[2,1]", "0", "1", "", ""},
    {"f1[1,4]", "e3[2,2]", "0", "1", "", ""},
    {"f1[1,4]", "e3[2,3]", "0", "1", "", ""},
    {"f1[1,4]", "e3[2,4]", "0", "1", "", ""},
    {"f1[1,4]", "e3[3,1]", "0", "1", "", ""},
    {"f1[1,4]", "e3[3,2]", "0", "1", "", ""},
    {"f1[1,4]", "e3[3,3]", "0", "1", "", ""},
    {"f1[1,4]", "e3[3,4]", "0", "1", "", ""},
    {"f1[1,4]", "e3[4,1]", "0", "1", "", ""},
    {"f1[1,4]", "e3[4,2]", "0", "1", "", ""},
    {"f1[1,4]", "e3[4,3]", "0", "1", "", ""},
    {"f1[1,4]", "e3[4,4]", "0", "1", "", ""},
    {"f1[2,1]", "e3[1,1]", "0", "1", "", ""},
    {"f1[2,1]", "e3[1,2]", "0", "1", "", ""},
    {"f1[2,1]", "e3[1,3]", "0", "1", "", ""},
    {"f1[2,1]", "e3[1,4]", "0", "1", "", ""},
    {"f1[2,1]", "e3[2,1]", "0", "1", "", ""},
    {"f1[2,1]", "e3[2,2]", "0", "1", "", ""},
    {"f1[2,1]", "e3[2,3]", "0", "1", "", ""},
    {"f1[2,1]", "e3[2,4]", "0", "1", "", ""},
    {"f1[2,1]", "e3[3,1]", "0", "1", "", ""},
    {"f1[2,1]", "e3[3,2]", "0", "1", "", ""},
    {"f1[2,1]", "e3[3,3]", "0", "1", "", ""},
    {"f1[2,1]", "e3[3,4]", "0", "1", "", ""},
    {"f1[2,1]", "e3[4,1]", "0", "1", "", ""},
    {"f1[2,1]", "e3[4,2]", "0", "1", "", ""},
    {"f1[2,1]", "e3[4,3]", "0", "1", "", ""},
    {"f1[2,1]", "e3[4,4]", "0", "1", "", ""},
    {"f1[2,2]", "e3[1,1]", "0", "1", "", ""},
    {"f1[2,2]", "e3[1,2]", "0", "1", "", ""},
    {"f1[2,2]", "e3[1,3]", "0", "1", "", ""},
    {"f1[2,2]", "e3[1,4]", "0", "1", "", ""},
    {"f1[2,2]", "e3[2,1]", "0", "1", "", ""},
    {"f1[2,2]", "e3[2,2]", "0", "1", "", ""},
    {"f1[2,2]", "e3[2,3]", "0", "1", "", ""},
    {"f1[2,2]", "e3[2,4]", "0", "1", "", ""},
    {"f1[2,2]", "e3[3,1]", "0", "1", "", ""},
    {"f1[2,2]", "e3[3,2]", "0", "1", "", ""},
    {"f1[2,2]", "e3[3,3]", "0", "1", "", ""},
    {"f1[2,2]", "e3[3,4]", "0", "1", "", ""},
    {"f1[2,2]", "e3[4,1]", "0", "1", "", ""},
    {"f1[2,2]", "e3[4,2]", "0", "1", "", ""},
    {"f1[2,2]", "e3[4,3]", "0", "1", "", ""},
    {"f1[2,2]", "e3[4,4]", "0", "1", "", ""},
    {"f1[2,3]", "e3[1,1]", "0", "1", "", ""},
    {"f1[2,3]", "e3[1,2]", "0", "1", "", ""},
    {"f1[2,3]", "e3[1,3]", "0", "1", "", ""},
    {"f1[2,3]", "e3[1,4]", "0", "1", "", ""},
    {"f1[2,3]", "e3[2,1]", "0", "1", "", ""},
    {"f1[2,3]", "e3[2,2]", "0", "1", "", ""},
    {"f1[2,3]", "e3[2,3]", "0", "1", "", ""},
    {"f1[2,3]", "e3[2,4]", "0", "1", "", ""},
    {"f1[2,3]", "e3[3,1]", "0", "1", "", ""},
    {"f1[2,3]", "e3[3,2]", "0", "1", "", ""},
    {"f1[2,3]", "e3[3,3]", "0", "1", "", ""},
    {"f1[2,3]", "e3[3,4]", "0", "1", "", ""},
    {"f1[2,3]", "e3[4,1]", "0", "1", "", ""},
    {"f1[2,3]", "e3[4,2]", "0", "1", "", ""},
    {"f1[2,3]", "e3[4,3]", "0", "1", "", ""},
    {"f1[2,3]", "e3[4,4]", "0", "1", "", ""},
    {"f1[2,4]", "e3[1,1]", "0", "1", "", ""},
    {"f1[2,4]", "e3[1,2]", "0", "1", "", ""},
    {"f1[2,4]", "e3[1,3]", "0", "1", "", ""},
    {"f1[2,4]", "e3[1,4]", "0", "1", "", ""},
    {"f1[2,4]", "e3[2,1]", "0", "1", "", ""},
    {"f1[2,4]", "e3[2,2]", "0", "1", "", ""},
    {"f1[2,4]", "e3[2,3]", "0", "1", "", ""},
    {"f1[2,4]", "e3[2,4]", "0", "1", "", ""},
    {"f1[2,4]", "e3[3,1]", "0", "1", "", ""},
    {"f1[2,4]", "e3[3,2]", "0", "1", "", ""},
    {"f1[2,4]", "e3[3,3]", "0", "1", "", ""},
    {"f1[2,4]", "e3[3,4]", "0", "1", "", ""},
    {"f1[2,4]", "e3[4,1]", "0", "1", "", ""},
    {"f1[2,4]", "e3[4,2]", "0", "1", "", ""},
    {"f1[2,4]", "e3[4,3]", "0", "1", "", ""},
    {"f1[2,4]", "e3[4,4]", "0", "1", "", ""},
    {"f1[3,1]", "e3[1,1]", "0", "1", "", ""},
    {"f1[3,1]", "e3[1,2]", "0", "1", "", ""},
    {"f1[3,1]", "e3[1,3]", "0", "1", "", ""},
    {"f1[3,1]", "e3[1,4]", "0", "1", "", ""},
    {"f1[3,1]", "e3[2,1]", "0", "1", "", ""},
    {"f1[3,1]", "e3[2,2]", "0", "1", "", ""},
    {"f1[3,1]", "e3[2,3]", "0", "1", "", ""},
    {"f1[3,1]", "e3[2,4]", "0", "1", "", ""},
    {"f1[3,1]", "e3[3,1]", "0", "1", "", ""},
    {"f1[3,1]", "e3[3,2]", "0", "1", "", ""},
    {"f1[3,1]", "e3[3,3]", "0", "1", "", ""},
    {"f1[3,1]", "e3[3,4]", "0", "1", "", ""},
    {"f1[3,1]", "e3[4,1]", "0", "1", "", ""},
    {"f1[3,1]", "e3[4,2]", "0", "1", "", ""},
    {"f1[3,1]", "e3[4,3]", "0", "1", "", ""},
    {"f1[3,1]", "e3[4,4]", "0", "1", "", ""},
    {"f1[3,2]", "e3[1,1]", "0", "1", "", ""},
    {"f1[3,2]", "e3[1,2]", "0", "1", "", ""},
    {"f1[3,2]", "e3[1,3]", "0", "1", "", ""},
    {"f1[3,2]", "e3[1,4]", "0", "1", "", ""},
    {"f1[3,2]", "e3[2,1]", "0", "1", "", ""},
    {"f1[3,2]", "e3[2,2]", "0", "1", "", ""},
    {"f1[3,2]", "e3[2,3]", "0", "1", "", ""},
    {"f1[3,2]", "e3[2,4]", "0", "1", "", ""},
    {"f1[3,2]", "e3[3,1]", "0", "1", "", ""},
    {"f1[3,2]", "e3[3,2]", "0", "1", "", ""},
    {"f1[3,2]", "e3[3,3]", "0", "1", "", ""},
    {"f1[3,2]", "e3[3,4]", "0", "1", "", ""},
    {"f1[3,2]", "e3[4,1]", "0", "1", "", ""},
    {"f1[3,2]", "e3[4,2]", "0", "1", "", ""},
    {"f1[3,2]", "e3[4,3]", "0", "1", "", ""},
    {"f1[3,2]", "e3[4,4]", "0", "1", "", ""},
    {"f1[3,3]", "e3[1,1]", "0", "1", "", ""},
    {"f1[3,3]", "e3[1,2]", "0", "1", "", ""},
    {"f1[3,3]", "e3[1,3]", "0", "1", "", ""},
    {"f1[3,3]", "e3[1,4]", "0", "1", "", ""},
    {"f1[3,3]", "e3[2,1]", "0", "1", "", ""},
    {"f1[3,3]", "e3[2,2]", "0", "1", "", ""},
    {"f1[3,3]", "e3[2,3]", "0", "1", "", ""},
    {"f1[3,3]", "e3[2,4]", "0", "1", "", ""},
    {"f1[3,3]", "e3[3,1]", "0", "1", "", ""},
    {"f1[3,3]", "e3[3,2]", "0", "1", "", ""},
    {"f1[3,3]", "e3[3,3]", "0", "1", "", ""},
    {"f1[3,3]", "e3[3,4]", "0", "1", "", ""},
    {"f1[3,3]", "e3[4,1]", "0", "1", "", ""},
    {"f1[3,3]", "e3[4,2]", "0", "1", "", ""},
    {"f1[3,3]", "e3[4,3]", "0", "1", "", ""},
    {"f1[3,3]", "e3[4,4]", "0", "1", "", ""},
    {"f1[3,4]", "e3[1,1]", "0", "1", "", ""},
    {"f1[3,4]", "e3[1,2]", "0", "1", "", ""},
    {"f1[3,4]", "e3[1,3]", "0", "1", "", ""},
    {"f1[3,4]", "e3[1,4]", "0", "1", "", ""},
    {"f1[3,4]", "e3[2,1]", "0", "1", "", ""},
    {"f1[3,4]", "e3[2,2]", "0", "1", "", ""},
    {"f1[3,4]", "e3[2,3]", "0", "1", "", ""},
    {"f1[3,4]", "e3[2,4]", "0", "1", "", ""},
    {"f1[3,4]", "e3[3,1]", "0", "1", "", ""},
    {"f1[3,4]", "e3[3,2]", "0", "1", "", ""},
    {"f1[3,4]", "e3[3,3]", "0", "1", "", ""},
    {"f1[3,4]", "e3[3,4]", "0", "1", "", ""},
    {"f1[3,4]", "e3[4,1]", "0", "1", "", ""},
    {"f1[3,4]", "e3[4,2]", "0", "1", "", ""},
    {"f1[3,4]", "e3[4,3]", "0", "1", "", ""},
    {"f1[3,4]", "e3[4,4]", "0", "1", "", ""},
    {"f1[4,1]", "e3[1,1]", "0", "1", "", ""},
    {"f1[4,1]", "e3[1,2]", "0", "1", "", ""},
    {"f1[4,1]", "e3[1,3]", "0", "1", "", ""},
    {"f1[4,1]", "e3[1,4]", "0", "1", "", ""},
    {"f1[4,1]", "e3[2,1]", "0", "1", "", ""},
    {"f1[4,1]", "e3[2,2]", "0", "1", "", ""},
    {"f1[4,1]", "e3[2,3]", "0", "1", "", ""},
    {"f1[4,1]", "e3[2,4]", "0", "1", "", ""},
    {"f1[4,1]", "e3[3,1]", "0", "1", "", ""},
    {"f1[4,1]", "e3[3,2]", "0", "1", "", ""},
    {"f1[4,1]", "e3[3,3]", "0", "1", "", ""},
    {"f1[4,1]", "e3[3,4]", "0", "1", "", ""},
    {"f1[4,1]", "e3[4,1]", "0", "1", "", ""},
    {"f1[4,1]", "e3[4,2]", "0", "1", "", ""},
    {"f1[4,1]", "e3[4,3]", "0", "1", "", ""},
    {"f1[4,1]", "e3[4,4]", "0", "1", "", ""},
    {"f1[4,2]", "e3[1,1]", "0", "1", "", ""},
    {"f1[4,2]", "e3[1,2]", "0", "1", "", ""},
    {"f1[4,2]", "e3[1,3]", "0", "1", "", ""},
    {"f1[4,2]", "e3[1,4]", "0", "1", "", ""},
    {"f1[4,2]", "e3[2,1]", "0", "1", "", ""},
    {"f1[4,2]", "e3[2,2]", "0", "1", "", ""},
    {"f1[4,2]", "e3[2,3]", "0", "1", "", ""},
    {"f1[4,2]", "e3[2,4]", "0", "1", "", ""},
    {"f1[4,2]", "e3[3,1]", "0", "1", "", ""},
    {"f1[4,2]", "e3[3,2]", "0", "1", "", ""},
    {"f1[4,2]", "e3[3,3]", "0", "1", "", ""},
    {"f1[4,2]", "e3[3,4]", "0", "1", "", ""},
    {"f1[4,2]", "e3[4,1]", "0", "1", "", ""},
    {"f1[4,2]", "e3[4,2]", "0", "1", "", ""},
    {"f1[4,2]", "e3[4,3]", "0", "1", "", ""},
    {"f1[4,2]", "e3[4,4]", "0", "1", "", ""},
    {"f1[4,3]", "e3[1,1]", "0", "1", "", ""},
    {"f1[4,3]", "e3[1,2]", "0", "1", "", ""},
    {"f1[4,3]", "e3[1,3]", "0", "1", "", ""},
    {"f1[4,3]", "e3[1,4]", "0", "1", "", ""},
    {"f1[4,3]", "e3[2,1]", "0", "1", "", ""},
    {"f1[4,3]", "e3[2,2]", "0", "1", "", ""},
    {"f1[4,3]", "e3[2,3]", "0", "1", "", ""},
    {"f1[4,3]", "e3[2,4]", "0", "1", "", ""},
    {"f1[4,3]", "e3[3,1]", "0", "1", "", ""},
    {"f1[4,3]", "e3[3,2]", "0", "1", "", ""},
    {"f1[4,3]", "e3[3,3]", "0", "1", "", ""},
    {"f1[4,3]", "e3[3,4]", "0", "1", "", ""},
    {"f1[4,3]", "e3[4,1]", "0", "1", "", ""},
    {"f1[4,3]", "e3[4,2]", "0", "1", "", ""},
    {"f1[4,3]", "e3[4,3]", "0", "1", "", ""},
    {"f1[4,3]", "e3[4,4]", "0", "1", "", ""},
    {"f1[4,4]", "e3[1,1]", "0", "1", "", ""},
    {"f1[4,4]", "e3[1,2]", "0", "1", "", ""},
    {"f1[4,4]", "e3[1,3]", "0", "1", "", ""},
    {"f1[4,4]", "e3[1,4]", "0", "1", "", ""},
    {"f1[4,4]", "e3[2,1]", "0", "1", "", ""},
    {"f1[4,4]", "e3[2,2]", "0", "1", "", ""},
    {"f1[4,4]", "e3[2,3]", "0", "1", "", ""},
    {"f1[4,4]", "e3[2,4]", "0", "1", "", ""},
    {"f1[4,4]", "e3[3,1]", "0", "1", "", ""},
    {"f1[4,4]", "e3[3,2]", "0", "1", "", ""},
    {"f1[4,4]", "e3[3,3]", "0", "1", "", ""},
    {"f1[4,4]", "e3[3,4]", "0", "1", "", ""},
    {"f1[4,4]", "e3[4,1]", "0", "1", "", ""},
    {"f1[4,4]", "e3[4,2]", "0", "1", "", ""},
    {"f1[4,4]", "e3[4,3]", "0", "1", "", ""},
    {"f1[4,4]", "e3[4,4]", "0", "1", "", ""},
    {"f1[1,1]", "e4[1,1]", "0", "1", "", ""},
    {"f1[1,1]", "e4[1,2]", "0", "1", "", ""},
    {"f1[1,1]", "e4[2,1]", "0", "1", "", ""},
    {"f1[1,1]", "e4[2,2]", "0", "1", "", ""},
    {"f1[1,2]", "e4[1,1]", "0", "1", "", ""},
    {"f1[1,2]", "e4[1,2]", "0", "1", "", ""},
    {"f1[1,2]", "e4[2,1]", "0", "1", "", ""},
    {"f1[1,2]", "e4[2,2]", "0", "1", "", ""},
    {"f1[1,3]", "e4[1,1]", "0", "1", "", ""},
    {"f1[1,3]", "e4[1,2]", "0", "1", "", ""},
    {"f1[1,3]", "e4[2,1]", "0", "1", "", ""},
    {"f1[1,3]", "e4[2,2]", "0", "1", "", ""},
    {"f1[1,4]", "e4[1,1]", "0", "1", "", ""},
    {"f1[1,4]", "e4[1,2]", "0", "1", "", ""},
    {"f1[1,4]", "e4[2,1]", "0", "1", "", ""},
    {"f1[1,4]", "e4[2,2]", "0", "1", "", ""},
    {"f1[2,1]", "e4[1,1]", "0", "1", "", ""},
    {"f1[2,1]", "e4[1,2]", "0", "1", "", ""},
    {"f1[2,1]", "e4[2,1]", "0", "1", "", ""},
    {"f1[2,1]", "e4[2,2]", "0", "1", "", ""},
    {"f1[2,2]", "e4[1,1]", "0", "1", "", ""},
    {"f1[2,2]", "e4[1,2]", "0", "1", "", ""},
    {"f1[2,2]", "e4[2,1]", "0", "1", "", ""},
    {"f1[2,2]", "e4[2,2]", "0", "1", "", ""},
    {"f1[2,3]", "e4[1,1]", "0", "1", "", ""},
    {"f1[2,3]", "e4[1,2]", "0", "1", "", ""},
    {"f1[2,3]", "e4[2,1]", "0", "1", "", ""},
    {"f1[2,3]", "e4[2,2]", "0", "1", "", ""},
    {"f1[2,4]", "e4[1,1]", "0", "1", "", ""},
    {"f1[2,4]", "e4[1,2]", "0", "1", "", ""},
    {"f1[2,4]", "e4[2,1]", "0", "1", "", ""},
    {"f1[2,4]", "e4[2,2]", "0", "1", "", ""},
    {"f1[3,1]", "e4[1,1]", "0", "1", "", ""},
    {"f1[3,1]", "e4[1,2]", "0", "1", "", ""},
    {"f1[3,1]", "e4[2,1]", "0", "1", "", ""},
    {"f1[3,1]", "e4[2,2]", "0", "1", "", ""},
    {"f1[3,2]", "e4[1,1]", "0", "1", "", ""},
    {"f1[3,2]", "e4[1,2]", "0", "1", "", ""},
    {"f1[3,2]", "e4[2,1]", "0", "1", "", ""},
    {"f1[3,2]", "e4[2,2]", "0", "1", "", ""},
    {"f1[3,3]", "e4[1,1]", "0", "1", "", ""},
    {"f1[3,3]", "e4[1,2]", "0", "1", "", ""},
    {"f1[3,3]", "e4[2,1]", "0", "1", "", ""},
    {"f1[3,3]", "e4[2,2]", "0", "1", "", ""},
    {"f1[3,4]", "e4[1,1]", "0", "1", "", ""},
    {"f1[3,4]", "e4[1,2]", "0", "1", "", ""},
    {"f1[3,4]", "e4[2,1]", "0", "1", "", ""},
    {"f1[3,4]", "e4[2,2]", "0", "1", "", ""},
    {"f1[4,1]", "e4[1,1]", "0", "1", "", ""},
    {"f1[4,1]", "e4[1,2]", "0", "1", "", ""},
    {"f1[4,1]", "e4[2,1]", "0", "1", "", ""},
    {"f1[4,1]", "e4[2,2]", "0", "1", "", ""},
    {"f1[4,2]", "e4[1,1]", "0", "1", "", ""},
    {"f1[4,2]", "e4[1,2]", "0", "1", "", ""},
    {"f1[4,2]", "e4[2,1]", "0", "1", "", ""},
    {"f1[4,2]", "e4[2,2]", "0", "1", "", ""},
    {"f1[4,3]", "e4[1,1]", "0", "1", "", ""},
    {"f1[4,3]", "e4[1,2]", "0", "1", "", ""},
    {"f1[4,3]", "e4[2,1]", "0", "1", "", ""},
    {"f1[4,3]", "e4[2,2]", "0", "1", "", ""},
    {"f1[4,4]", "e4[1,1]", "0", "1", "", ""},
    {"f1[4,4]", "e4[1,2]", "0", "1", "", ""},
    {"f1[4,4]", "e4[2,1]", "0", "1", "", ""},
    {"f1[4,4]", "e4[2,2]", "0", "1", "", ""},
    {"f2[1,1]", "e1[1,1]", "0", "1", "", ""},
    {"f2[1,1]", "e1[1,2]", "0", "1", "", ""},
    {"f2[1,1]", "e1[2,1]", "0", "1", "", ""},
    {"f2[1,1]", "e1[2,2]", "0", "1", "", ""},
    {"f2[1,2]", "e1[1,1]", "0", "1", "", ""},
    {"f2[1,2]", "e1[1,2]", "0", "1", "", ""},
    {"f2[1,2]", "e1[2,1]", "0", "1", "", ""},
    {"f2[1,2]", "e1[2,2]", "0", "1", "", ""},
    {"f2[1,3]", "e1[1,1]", "0", "1", "", ""},
    {"f2[1,3]", "e1[1,2]", "0", "1", "", ""},
    {"f2[1,3]", "e1[2,1]", "0", "1", "", ""},
    {"f2[1,3]", "e1[2,2]", "0", "1", "", ""},
    {"f2[2,1]", "e1[1,1]", "0", "1", "", ""},
    {"f2[2,1]", "e1[1,2]", "0", "1", "", ""},
    {"f2[2,1]", "e1[2,1]", "0", "1", "", ""},
    {"f2[2,1]", "e1[2,2]", "0", "1", "", ""},
    {"f2[2,2]", "e1[1,1]", "0", "1", "", ""},
    {"f2[2,2]", "e1[1,2]", "0", "1", "", ""},
    {"f2[2,2]", "e1[2,1]", "0", "1", "", ""},
    {"f2[2,2]", "e1[2,2]", "0", "1", "", ""},
    {"f2[2,3]", "e1[1,1]", "0", "1", "", ""},
    {"f2[2,3]", "e1[1,2]", "0", "1", "", ""},
    {"f2[2,3]", "e1[2,1]", "0", "1", "", ""},
    {"f2[2,3]", "e1[2,2]", "0", "1", "", ""},
    {"f2[3,1]", "e1[1,1]", "0", "1", "", ""},
    {"f2[3,1]", "e1[1,2]", "0", "1", "", ""},
    {"f2[3,1]", "e1[2,1]", "0", "1", "", ""},
    {"f2[3,1]", "e1[2,2]", "0", "1", "", ""},
    {"f2[3,2]", "e1[1,1]", "0", "1", "", ""},
    {"f2[3,2]", "e1[1,2]", "0", "1", "", ""},
    {"f2[3,2]", "e1[2,1]", "0", "1", "", ""},
    {"f2[3,2]", "e1[2,2]", "0", "1", "", ""},
    {"f2[3,3]", "e1[1,1]", "0", "1", "", ""},
    {"f2[3,3]", "e1[1,2]", "0", "1", "", ""},
    {"f2[3,3]", "e1[2,1]", "0", "1", "", ""},
    {"f2[3,3]", "e1[2,2]", "0", "1", "", ""},
    {"f2[1,1]", "e3[1,1]", "0", "1", "", ""},
    {"f2[1,1]", "e3[1,2]", "0", "1", "", ""},
    {"f2[1,1]", "e3[1,3]", "0", "1", "", ""},
    {"f2[1,1]", "e3[1,4]", "0", "1", "", ""},
    {"f2[1,1]", "e3[2,1]", "0", "1", "", ""},
    {"f2[1,1]", "e3[2,2]", "0", "1", "", ""},
    {"f2[1,1]", "e3[2,3]", "0", "1", "", ""},
    {"f2[1,1]", "e3[2,4]", "0", "1", "", ""},
    {"f2[1,1]", "e3[3,1]", "0", "1", "", ""},
    {"f2[1,1]", "e3[3,2]", "0", "1", "", ""},
    {"f2[1,1]", "e3[3,3]", "0", "1", "", ""},
    {"f2[1,1]", "e3[3,4]", "0", "1", "", ""},
    {"f2[1,1]", "e3[4,1]", "0", "1", "", ""},
    {"f2[1,1]", "e3[4,2]", "0", "1", "", ""},
    {"f2[1,1]", "e3[4,3]", "0", "1", "", ""},
    {"f2[1,1]", "e3[4,4]", "0", "1", "", ""},
    {"f2[1,2]", "e3[1,1]", "0", "1", "", ""},
    {"f2[1,2]", "e3[1,2]", "0", "1", "", ""},
    {"f2[1,2]", "e3[1,3]", "0", "1", "", ""},
    {"f2[1,2]", "e3[1,4]", "0", "1", "", ""},
    {"f2[1,2]", "e3[2,1]", "0", "1", "", ""},
    {"f2[1,2]", "e3[2,2]", "0", "1", "", ""},
    {"f2[1,2]", "e3[2,3]", "0", "1", "", ""},
    {"f2[1,2]", "e3[2,4]", "0", "1", "", ""},
    {"f2[1,2]", "e3[3,1]", "0", "1", "", ""},
    {"f2[1,2]", "e3[3,2]", "0", "1", "", ""},
    {"f2[1,2]", "e3[3,3]", "0", "1", "", ""},
    {"f2[1,2]", "e3[3,4]", "0", "1", "", ""},
    {"f2[1,2]", "e3[4,1]", "0", "1", "", ""},
    {"f2[1,2]", "e3[4,2]", "0", "1", "", ""},
    {"f2[1,2]", "e3[4,3]", "0", "1", "", ""},
    {"f2[1,2]", "e3[4,4]", "0", "1", "", ""},
    {"f2[1,3]", "e3[1,1]", "0", "1", "", ""},
    {"f2[1,3]", "e3[1,2]", "0", "1", "", ""},
    {"f2[1,3]", "e3[1,3]", "0", "1", "", ""},
    {"f2[1,3]", "e3[1,4]", "0", "1", "", ""},
    {"f2[1,3]", "e3[2,1]", "0", "1", "", ""},
    {"f2[1,3]", "e3[2,2]", "0", "1", "", ""},
    {"f2[1,3]", "e3[2,3]", "0", "1", "", ""},
    {"f2[1,3]", "e3[2,4]", "0", "1", "", ""},
    {"f2[1,3]", "e3[3,1]", "0", "1", "", ""},
    {"f2[1,3]", "e3[3,2]", "0", "1", "", ""},
    {"f2[1,3]", "e3[3,3]", "0", "1", "", ""},
    {"f2[1,3]", "e3[3,4]", "0", "1", "", ""},
    {"f2[1,3]", "e3[4,1]", "0", "1", "", ""},
    {"f2[1,3]", "e3[4,2]", "0", "1", "", ""},
    {"f2[1,3]", "e3[4,3]", "0", "1", "", ""},
    {"f2[1,3]", "e3[4,4]", "0", "1", "", ""},
    {"f2[2,1]", "e3[1,1]", "0", "1", "", ""},
    {"f2[2,1]", "e3[1,2]", "0", "1", "", ""},
    {"f2[2,1]", "e3[1,3]", "0", "1", "", ""},
    {"f2[2,1]", "e3[1,4]", "0", "1", "", ""},
    {"f2[2,1]", "e3[2,1]", "0", "1", "", ""},
    {"f2[2,1]", "e3[2,2]", "0", "1", "", ""},
    {"f2[2,1]", "e3[2,3]", "0", "1", "", ""},
    {"f2[2,1]", "e3[2,4]", "0", "1", "", ""},
    {"f2[2,1]", "e3[3,1]", "0", "1", "", ""},
    {"f2[2,1]", "e3[3,2]", "0", "1", "", ""},
    {"f2[2,1]", "e3[3,3]", "0", "1", "", ""},
    {"f2[2,1]", "e3[3,4]", "0", "1", "", ""},
    {"f2[2,1]", "e3[4,1]", "0", "1", "", ""},
    {"f2[2,1]", "e3[4,2]", "0", "1", "", ""},
    {"f2[2,1]", "e3[4,3]", "0", "1", "", ""},
    {"f2[2,1]", "e3[4,4]", "0", "1", "", ""},
    {"f2[2,2]", "e3[1,1]", "0", "1", "", ""},
    {"f2[2,2]", "e3[1,2]", "0", "1", "", ""},
    {"f2[2,2]", "e3[1,3]", "0", "1", "", ""},
    {"f2[2,2]", "e3[1,4]", "0", "1", "", ""},
    {"f2[2,2]", "e3[2,1]", "0", "1", "", ""},
    {"f2[2,2]", "e3[2,2]", "0", "1", "", ""},
    {"f2[2,2]", "e3[2,3]", "0", "1", "", ""},
    {"f2[2,2]", "e3[2,4]", "0", "1", "", ""},
    {"f2[2,2]", "e3[3,1]", "0", "1", "", ""},
    {"f2[2,2]", "e3[3,2]", "0", "1", "", ""},
    {"f2[2,2]", "e3[3,3]", "0", "1", "", ""},
    {"f2[2,2]", "e3[3,4]", "0", "1", "", ""},
    {"f2[2,2]", "e3[4,1]", "0", "1", "", ""},
    {"f2[2,2]", "e3[4,2]", "0", "1", "", ""},
    {"f2[2,2]", "e3[4,3]", "0", "1", "", ""},
    {"f2[2,2]", "e3[4,4]", "0", "1", "", ""},
    {"f2[2,3]", "e3[1,1]", "0", "1", "", ""},
    {"f2[2,3]", "e3[1,2]", "0", "1", "", ""},
    {"f2[2,3]", "e3[1,3]", "0", "1", "", ""},
    {"f2[2,3]", "e3[1,4]", "0", "1", "", ""},
    {"f2[2,3]", "e3[2,1]", "0", "1", "", ""},
    {"f2[2,3]", "e3[2,2]", "0", "1", "", ""},
    {"f2[2,3]", "e3[2,3]", "0", "1", "", ""},
    {"f2[2,3]", "e3[2,4]", "0", "1", "", ""},
    {"f2[2,3]", "e3[3,1]", "0", "1", "", ""},
    {"f2[2,3]", "e3[3,2]", "0", "1", "", ""},
    {"f2[2,3]", "e3[3,3]", "0", "1", "", ""},
    {"f2[2,3]", "e3[3,4]", "0", "1", "", ""},
    {"f2[2,3]", "e3[4,1]", "0", "1", "", ""},
    {"f2[2,3]", "e3[4,2]", "0", "1", "", ""},
    {"f2[2,3]", "e3[4,3]", "0", "1", "", ""},
    {"f2[2,3]", "e3[4,4]", "0", "1", "", ""},
    {"f2[3,1]", "e3[1,1]", "0", "1", "", ""},
    {"f2[3,1]", "e3[1,2]", "0", "1", "", ""},
    {"f2[3,1]", "e3[1,3]", "0", "1", "", ""},
    {"f2[3,1]", "e3[1,4]", "0", "1", "", ""},
    {"f2[3,1]", "e3[2,1]", "0", "1", "", ""},
    {"f2[3,1]", "e3[2,2]", "0", "1", "", ""},
    {"f2[3,1]", "e3[2,3]", "0", "1", "", ""},
    {"f2[3,1]", "e3[2,4]", "0", "1", "", ""},
    {"f2[3,1]", "e3[3,1]", "0", "1", "", ""},
    {"f2[3,1]", "e3[3,2]", "0", "1", "", ""},
    {"f2[3,1]", "e3[3,3]", "0", "1", "", ""},
    {"f2[3,1]", "e3[3,4]", "0", "1", "", ""},
    {"f2[3,1]", "e3[4,1]", "0", "1", "", ""},
    {"f2[3,1]", "e3[4,2]", "0", "1", "", ""},
    {"f2[3,1]", "e3[4,3]", "0", "1", "", ""},
    {"f2[3,1]", "e3[4,4]", "0", "1", "", ""},
    {"f2[3,2]", "e3[1,1]", "0", "1", "", ""},
    {"f2[3,2]", "e3[1,2]", "0", "1", "", ""},
    {"f2[3,2]", "e3[1,3]", "0", "1", "", ""},
    {"f2[3,2]", "e3[1,4]", "0", "1", "", ""},
    {"f2[3,2]", "e3[2,1]", "0", "1", "", ""},
    {"f2[3,2]", "e3[2,2]", "0", "1", "", ""},
    {"f2[3,2]", "e3[2,3]", "0", "1", "", ""},
    {"f2[3,2]", "e3[2,4]", "0", "1", "", ""},
    {"f2[3,2]", "e3[3,1]", "0", "1", "", ""},
    {"f2[3,2]", "e3[3,2]", "0", "1", "", ""},
    {"f2[3,2]", "e3[3,3]", "0", "1", "", ""},
    {"f2[3,2]", "e3[3,4]", "0", "1", "", ""},
    {"f2[3,2]", "e3[4,1]", "0", "1", "", ""},
    {"f2[3,2]", "e3[4,2]", "0", "1", "", ""},
    {"f2[3,2]", "e3[4,3]", "0", "1", "", ""},
    {"f2[3,2]", "e3[4,4]", "0", "1", "", ""},
    {"f2[3,3]", "e3[1,1]", "0", "1", "", ""},
    {"f2[3,3]", "e3[1,2]", "0", "1", "", ""},
    {"f2[3,3]", "e3[1,3]", "0", "1", "", ""},
    {"f2[3,3]", "e3[1,4]", "0", "1", "", ""},
    {"f2[3,3]", "e3[2,1]", "0", "1", "", ""},
    {"f2[3,3]", "e3[2,2]", "0", "1", "", ""},
    {"f2[3,3]", "e3[2,3]", "0", "1", "", ""},
    {"f2[3,3]", "e3[2,4]", "0", "1", "", ""},
    {"f2[3,3]", "e3[3,1]", "0", "1", "", ""},
    {"f2[3,3]", "e3[3,2]", "0", "1", "", ""},
    {"f2[3,3]", "e3[3,3]", "0", "1", "", ""},
    {"f2[3,3]", "e3[3,4]", "0", "1", "", ""},
    {"f2[3,3]", "e3[4,1]", "0", "1", "", ""},
    {"f2[3,3]", "e3[4,2]", "0", "1", "", ""},
    {"f2[3,3]", "e3[4,3]", "0", "1", "", ""},
    {"f2[3,3]", "e3[4,4]", "0", "1", "", ""},
    {"f2[1,1]", "e4[1,1]", "0", "1", "", ""},
    {"f2[1,1]", "e4[1,2]", "0", "1", "", ""},
    {"f2[1,1]", "e4[2,1]", "0", "1", "", ""},
    {"f2[1,1]", "e4[2,2]", "0", "1", "", ""},
    {"f2[1,2]", "e4[1,1]", "0", "1", "", ""},
    {"f2[1,2]", "e4[1,2]", "0", "1", "", ""},
    {"f2[1,2]", "e4[2,1]", "0", "1", "", ""},
    {"f2[1,2]", "e4[2,2]", "0", "1", "", ""},
    {"f2[1,3]", "e4[1,1]", "0", "1", "", ""},
    {"f2[1,3]", "e4[1,2]", "0", "1", "", ""},
    {"f2[1,3]", "e4[2,1]", "0", "1", "", ""},
    {"f2[1,3]", "e4[2,2]", "0", "1", "", ""},
    {"f2[2,1]", "e4[1,1]", "0", "1", "", ""},
    {"f2[2,1]", "e4[1,2]", "0", "1", "", ""},
    {"f2[2,1]", "e4[2,1]", "0", "1", "", ""},
    {"f2[2,1]", "e4[2,2]", "0", "1", "", ""},
    {"f2[2,2]", "e4[1,1]", "0", "1", "", ""},
    {"f2[2,2]", "e4[1,2]", "0", "1", "", ""},
    {"f2[2,2]", "e4[2,1]", "0", "1", "", ""},
    {"f2[2,2]", "e4[2,2]", "0", "1", "", ""},
    {"f2[2,3]", "e4[1,1]", "0", "1", "", ""},
    {"f2[2,3]", "e4[1,2]", "0", "1", "", ""},
    {"f2[2,3]", "e4[2,1]", "0", "1", "", ""},
    {"f2[2,3]", "e4[2,2]", "0", "1", "", ""},
    {"f2[3,1]", "e4[1,1]", "0", "1", "", ""},
    {"f2[3,1]", "e4[1,2]", "0", "1", "", ""},
    {"f2[3,1]", "e4[2,1]", "0", "1", "", ""},
    {"f2[3,1]", "e4[2,2]", "0", "1", "", ""},
    {"f2[3,2]", "e4[1,1]", "0", "1", "", ""},
    {"f2[3,2]", "e4[1,2]", "0", "1", "", ""},
    {"f2[3,2]", "e4[2,1]", "0", "1", "", ""},
    {"f2[3,2]", "e4[2,2]", "0", "1", "", ""},
    {"f2[3,3]", "e4[1,1]", "0", "1", "", ""},
    {"f2[3,3]", "e4[1,2]", "0", "1", "", ""},
    {"f2[3,3]", "e4[2,1]", "0", "1", "", ""},
    {"f2[3,3]", "e4[2,2]", "0", "1", "", ""},
    {"f3[1,1]", "e1[1,1]", "0", "1", "", ""},
    {"f3[1,1]", "e1[1,2]", "0", "1", "", ""},
    {"f3[1,1]", "e1[2,1]", "0", "1", "", ""},
    {"f3[1,1]", "e1[2,2]", "0", "1", "", ""},
    {"f3[1,2]", "e1[1,1]", "0", "1", "", ""},
    {"f3[1,2]", "e1[1,2]", "0", "1", "", ""},
    {"f3[1,2]", "e1[2,1]", "0", "1", "", ""},
    {"f3[1,2]", "e1[2,2]", "0", "1", "", ""},
    {"f3[1,3]", "e1[1,1]", "0", "1", "", ""},
    {"f3[1,3]", "e1[1,2]", "0", "1", "", ""},
    {"f3[1,3]", "e1[2,1]", "0", "1", "", ""},
    {"f3[1,3]", "e1[2,2]", "0", "1", "", ""},
    {"f3[1,4]", "e1[1,1]", "0", "1", "", ""},
    {"f3[1,4]", "e1[1,2]", "0", "1", "", ""},
    {"f3[1,4]", "e1[2,1]", "0", "1", "", ""},
    {"f3[1,4]", "e1[2,2]", "0", "1", "", ""},
    {"f3[1,5]", "e1[1,1]", "0", "1", "", ""},
    {"f3[1,5]", "e1[1,2]", "0", "1", "", ""},
    {"f3[1,5]", "e1[2,1]", "0", "1", "", ""},
    {"f3[1,5]", "e1[2,2]", "0", "1", "", ""},
    {"f3[2,1]", "e1[1,1]", "0", "1", "", ""},
    {"f3[2,1]", "e1[1,2]", "0", "1", "", ""},
    {"f3[2,1]", "e1[2,1]", "0", "1", "", ""},
    {"f3[2,1]", "e1[2,2]", "0", "1", "", ""},
    {"f3[2,2]", "e1[1,1]", "0", "1", "", ""},
    {"f3[2,2]", "e1[1,2]", "0", "1", "", ""},
    {"f3[2,2]", "e1[2,1]", "0", "1", "", ""},
    {"f3[2,2]", "e1[2,2]", "0", "1", "", ""},
    {"f3[2,3]", "e1[1,1]", "0", "1", "", ""},
    {"f3[2,3]", "e1[1,2]", "0", "1", "", ""},
    {"f3[2,3]", "e1[2,1]", "0", "1", "", ""},
    {"f3[2,3]", "e1[2,2]", "0", "1", "", ""},
    {"f3[2,4]", "e1[1,1]", "0", "1", "", ""},
    {"f3[2,4]", "e1[1,2]", "0", "1", "", ""},
    {"f3[2,4]", "e1[2,1]", "0", "1", "", ""},
    {"f3[2,4]", "e1[2,2]", "0", "1", "", ""},
    {"f3[2,5]", "e1[1,1]", "0", "1", "", ""},
    {"f3[2,5]", "e1[1,2]", "0", "1", "", ""},
    {"f3[2,5]", "e1[2,1]", "0", "1", "", ""},
    {"f3[2,5]", "e1[2,2]", "0", "1", "", ""},
    {"f3[3,1]", "e1[1,1]", "0", "1", "", ""},
    {"f3[3,1]", "e1[1,2]", "0", "1", "", ""},
    {"f3[3,1]", "e1[2,1]", "0", "1", "", ""},
    {"f3[3,1]", "e1[2,2]", "0", "1", "", ""},
    {"f3[3,2]", "e1[1,1]", "0", "1", "", ""},
    {"f3[3,2]", "e1[1,2]", "0", "1", "", ""},
    {"f3[3,2]", "e1[2,1]", "0", "1", "", ""},
    {"f3[3,2]", "e1[2,2]", "0", "1", "", ""},
    {"f3[3,3]", "e1[1,1]", "0", "1", "", ""},
    {"f3[3,3]", "e1[1,2]", "0", "1", "", ""},
    {"f3[3,3]", "e1[2,1]", "0", "1", "", ""},
    {"f3[3,3]", "e1[2,2]", "0", "1", "", ""},
    {"f3[3,4]", "e1[1,1]", "0", "1", "", ""},
    {"f3[3,4]", "e1[1,2]", "0", "1", "", ""},
    {"f3[3,4]", "e1[2,1]", "0", "1", "", ""},
    {"f3[3,4]", "e1[2,2]", "0", "1", "", ""},
    {"f3[3,5]", "e1[1,1]", "0", "1", "", ""},
    {"f3[3,5]", "e1[1,2]", "0", "1", "", ""},
    {"f3[3,5]", "e1[2,1]", "0", "1", "", ""},
    {"f3[3,5]", "e1[2,2]", "0", "1", "", ""},
    {"f3[4,1]", "e1[1,1]", "0", "1", "", ""},
    {"f3[4,1]", "e1[1,2]", "0", "1", "", ""},
    {"f3[4,1]", "e1[2,1]", "0", "1", "", ""},
    {"f3[4,1]", "e1[2,2]", "0", "1", "", ""},
    {"f3[4,2]", "e1[1,1]", "0", "1", "", ""},
    {"f3[4,2]", "e1[1,2]", "0", "1", "", ""},
    {"f3[4,2]", "e1[2,1]", "0", "1", "", ""},
    {"f3[4,2]", "e1[2,2]", "0", "1", "", ""},
    {"f3[4,3]", "e1[1,1]", "0", "1", "", ""},
    {"f3[4,3]", "e1[1,2]", "0", "1", "", ""},
    {"f3[4,3]", "e1[2,1]", "0", "1", "", ""},
    {"f3[4,3]", "e1[2,2]", "0", "1", "", ""},
    {"f3[4,4]", "e1[1,1]", "0", "1", "", ""},
    {"f3[4,4]", "e1[1,2]", "0", "1", "", ""},
    {"f3[4,4]", "e1[2,1]", "0", "1", "", ""},
    {"f3[4,4]", "e1[2,2]", "0", "1", "", ""},
    {"f3[4,5]", "e1[1,1]", "0", "1", "", ""},
    {"f3[4,5]", "e1[1,2]", "0", "1", "", ""},
    {"f3[4,5]", "e1[2,1]", "0", "1", "", ""},
    {"f3[4,5]", "e1[2,2]", "0", "1", "", ""},
    {"f3[5,1]", "e1[1,1]", "0", "1", "", ""},
    {"f3[5,1]", "e1[1,2]", "0", "1", "", ""},
    {"f3[5,1]", "e1[2,1]", "0", "1", "", ""},
    {"f3[5,1]", "e1[2,2]", "0", "1", "", ""},
    {"f3[5,2]", "e1[1,1]", "0", "1", "", ""},
    {"f3[5,2]", "e1[1,2]", "0", "1", "", ""},
    {"f3[5,2]", "e1[2,1]", "0", "1", "", ""},
    {"f3[5,2]", "e1[2,2]", "0", "1", "", ""},
    {"f3[5,3]", "e1[1,1]", "0", "1", "", ""},
    {"f3[5,3]", "e1[1,2]", "0", "1", "", ""},
    {"f3[5,3]", "e1[2,1]", "0", "1", "", ""},
    {"f3[5,3]", "e1[2,2]", "0", "1", "", ""},
    {"f3[5,4]", "e1[1,1]", "0", "1", "", ""},
    {"f3[5,4]", "e1[1,2]", "0", "1", "", ""},
    {"f3[5,4]", "e1[2,1]", "0", "1", "", ""},
    {"f3[5,4]", "e1[2,2]", "0", "1", "", ""},
    {"f3[5,5]", "e1[1,1]", "0", "1", "", ""},
    {"f3[5,5]", "e1[1,2]", "0", "1", "", ""},
    {"f3[5,5]", "e1[2,1]", "0", "1", "", ""},
    {"f3[5,5]", "e1[2,2]", "0", "1", "", ""},
    {"f3[1,1]", "e4[1,1]", "0", "1", "", ""},
    {"f3[1,1]", "e4[1,2]", "0", "1", "", ""},
    {"f3[1,1]", "e4[2,1]", "0", "1", "", ""},
    {"f3[1,1]", "e4[2,2]", "0", "1", "", ""},
    {"f3[1,2]", "e4[1,1]", "0", "1", "", ""},
    {"f3[1,2]", "e4[1,2]", "0", "1", "", ""},
    {"f3[1,2]", "e4[2,1]", "0", "1", "", ""},
    {"f3[1,2]", "e4[2,2]", "0", "1", "", ""},
    {"f3[1,3]", "e4[1,1]", "0", "1", "", ""},
    {"f3[1,3]", "e4[1,2]", "0", "1", "", ""},
    {"f3[1,3]", "e4[2,1]", "0", "1", "", ""},
    {"f3[1,3]", "e4[2,2]", "0", "1", "", ""},
    {"f3[1,4]", "e4[1,1]", "0", "1", "", ""},
    {"f3[1,4]", "e4[1,2]", "0", "1", "", ""},
    {"f3[1,4]", "e4[2,1]", "0", "1", "", ""},
    {"f3[1,4]", "e4[2,2]", "0", "1", "", ""},
    {"f3[1,5]", "e4[1,1]", "0", "1", "", ""},
    {"f3[1,5]", "e4[1,2]", "0", "1", "", ""},
    {"f3[1,5]", "e4[2,1]", "0", "1", "", ""},
    {"f3[1,5]", "e4[2,2]", "0", "1", "", ""},
    {"f3[2,1]", "e4[1,1]", "0", "1", "", ""},
    {"f3[2,1]", "e4[1,2]", "0", "1", "", ""},
    {"f3[2,1]", "e4[2,1]", "0", "1", "", ""},
    {"f3[2,1]", "e4[2,2]", "0", "1", "", ""},
    {"f3[2,2]", "e4[1,1]", "0", "1", "", ""},
    {"f3[2,2]", "e4[1,2]", "0", "1", "", ""},
    {"f3[2,2]", "e4[2,1]", "0", "1", "", ""},
    {"f3[2,2]", "e4[2,2]", "0", "1", "", ""},
    {"f3[2,3]", "e4[1,1]", "0", "1", "", ""},
    {"f3[2,3]", "e4[1,2]", "0", "1", "", ""},
    {"f3[2,3]", "e4[2,1]", "0", "1", "", ""},
    {"f3[2,3]", "e4[2,2]", "0", "1", "", ""},
    {"f3[2,4]", "e4[1,1]", "0", "1", "", ""},
    {"f3[2,4]", "e4[1,2]", "0", "1", "", ""},
    {"f3[2,4]", "e4[2,1]", "0", "1", "", ""},
    {"f3[2,4]", "e4[2,2]", "0", "1", "", ""},
    {"f3[2,5]", "e4[1,1]", "0", "1", "", ""},
    {"f3[2,5]", "e4[1,2]", "0", "1", "", ""},
    {"f3[2,5]", "e4[2,1]", "0", "1", "", ""},
    {"f3[2,5]", "e4[2,2]", "0", "1", "", ""},
    {"f3[3,1]", "e4[1,1]", "0", "1", "", ""},
    {"f3[3,1]", "e4[1,2]", "0", "1", "", ""},
    {"f3[3,1]", "e4[2,1]", "0", "1", "", ""},
    {"f3[3,1]", "e4[2,2]", "0", "1", "", ""},
    {"f3[3,2]", "e4[1,1]", "0", "1", "", ""},
    {"f3[3,2]", "e4[1,2]", "0", "1", "", ""},
    {"f3[3,2]", "e4[2,1]", "0", "1", "", ""},
    {"f3[3,2]", "e4[2,2]", "0", "1", "", ""},
    {"f3[3,3]", "e4[1,1]", "0", "1", "", ""},
    {"f3[3,3]", "e4[1,2]", "0", "1", "", ""},
    {"f3[3,3]", "e4[2,1]", "0", "1", "", ""},
    {"f3[3,3]", "e4[2,2]", "0", "1", "", ""},
    {"f3[3,4]", "e4[1,1]", "0", "1", "", ""},
    {"f3[3,4]", "e4[1,2]", "0", "1", "", ""},
    {"f3[3,4]", "e4[2,1]", "0", "1", "", ""},
    {"f3[3,4]", "e4[2,2]", "0", "1", "", ""},
    {"f3[3,5]", "e4[1,1]", "0", "1", "", ""},
    {"f3[3,5]", "e4[1,2]", "0", "1", "", ""},
    {"f3[3,5]", "e4[2,1]", "0", "1", "", ""},
    {"f3[3,5]", "e4[2,2]", "0", "1", "", ""},
    {"f3[4,1]", "e4[1,1]", "0", "1", "", ""},
    {"f3[4,1]", "e4[1,2]", "0", "1", "", ""},
    {"f3[4,1]", "e4[2,1]", "0", "1", "", ""},
    {"f3[4,1]", "e4[2,2]", "0", "1", "", ""},
    {"f3[4,2]", "e4[1,1]", "0", "1", "", ""},
    {"f3[4,2]", "e4[1,2]", "0", "1", "", ""},
    {"f3[4,2]", "e4[2,1]", "0", "1", "", ""},
    {"f3[4,2]", "e4[2,2]", "0", "1", "", ""},
    {"f3[4,3]", "e4[1,1]", "0", "1", "", ""},
    {"f3[4,3]", "e4[1,2]", "0", "1", "", ""},
    {"f3[4,3]", "e4[2,1]", "0", "1", "", ""},
    {"f3[4,3]", "e4[2,2]", "0", "1", "", ""},
    {"f3[4,4]", "e4[1,1]", "0", "1", "", ""},
    {"f3[4,4]", "e4[1,2]", "0", "1", "", ""},
    {"f3[4,4]", "e4[2,1]", "0", "1", "", ""},
    {"f3[4,4]", "e4[2,2]", "0", "1", "", ""},
    {"f3[4,5]", "e4[1,1]", "0", "1", "", ""},
    {"f3[4,5]", "e4[1,2]", "0", "1", "", ""},
    {"f3[4,5]", "e4[2,1]", "0", "1", "", ""},
    {"f3[4,5]", "e4[2,2]", "0", "1", "", ""},
    {"f3[5,1]", "e4[1,1]", "0", "1", "", ""},
    {"f3[5,1]", "e4[1,2]", "0", "1", "", ""},
    {"f3[5,1]", "e4[2,1]", "0", "1", "", ""},
    {"f3[5,1]", "e4[2,2]", "0", "1", "", ""},
    {"f3[5,2]", "e4[1,1]", "0", "1", "", ""},
    {"f3[5,2]", "e4[1,2]", "0", "1", "", ""},
    {"f3[5,2]", "e4[2,1]", "0", "1", "", ""},
    {"f3[5,2]", "e4[2,2]", "0", "1", "", ""},
    {"f3[5,3]", "e4[1,1]", "0", "1", "", ""},
    {"f3[5,3]", "e4[1,2]", "0", "1", "", ""},
    {"f3[5,3]", "e4[2,1]", "0", "1", "", ""},
    {"f3[5,3]", "e4[2,2]", "0", "1", "", ""},
    {"f3[5,4]", "e4[1,1]", "0", "1", "", ""},
    {"f3[5,4]", "e4[1,2]", "0", "1", "", ""},
    {"f3[5,4]", "e4[2,1]", "0", "1", "", ""},
    {"f3[5,4]", "e4[2,2]", "0", "1", "", ""},
    {"f3[5,5]", "e4[1,1]", "0", "1", "", ""},
    {"f3[5,5]", "e4[1,2]", "0", "1", "", ""},
    {"f3[5,5]", "e4[2,1]", "0", "1", "", ""},
    {"f3[5,5]", "e4[2,2]", "0", "1", "", ""},
    {"f4[1,1]", "e1[1,1]", "0", "1", "", ""},
    {"f4[1,1]", "e1[1,2]", "0", "1", "", ""},
    {"f4[1,1]", "e1[2,1]", "0", "1", "", ""},
    {"f4[1,1]", "e1[2,2]", "0", "1", "", ""},
    {"f4[1,2]", "e1[1,1]", "0", "1", "", ""},
    {"f4[1,2]", "e1[1,2]", "0", "1", "", ""},
    {"f4[1,2]", "e1[2,1]", "0", "1", "", ""},
    {"f4[1,2]", "e1[2,2]", "0", "1", "", ""},
    {"f4[1,3]", "e1[1,1]", "0", "1", "", ""},
    {"f4[1,3]", "e1[1,2]", "0", "1", "", ""},
    {"f4[1,3]", "e1[2,1]", "0", "1", "", ""},
    {"f4[1,3]", "e1[2,2]", "0", "1", "", ""},
    {"f4[2,1]", "e1[1,1]", "0", "1", "", ""},
    {"f4[2,1]", "e1[1,2]", "0", "1", "", ""},
    {"f4[2,1]", "e1[2,1]", "0", "1", "", ""},
    {"f4[2,1]", "e1[2,2]", "0", "1", "", ""},
    {"f4[2,2]", "e1[1,1]", "0", "1", "", ""},
    {"f4[2,2]", "e1[1,2]", "0", "1", "", ""},
    {"f4[2,2]", "e1[2,1]", "0", "1", "", ""},
    {"f4[2,2]", "e1[2,2]", "0", "1", "", ""},
    {"f4[2,3]", "e1[1,1]", "0", "1", "", ""},
    {"f4[2,3]", "e1[1,2]", "0", "1", "", ""},
    {"f4[2,3]", "e1[2,1]", "0", "1", "", ""},
    {"f4[2,3]", "e1[2,2]", "0", "1", "", ""},
    {"f4[3,1]", "e1[1,1]", "0", "1", "", ""},
    {"f4[3,1]", "e1[1,2]", "0", "1", "", ""},
    {"f4[3,1]", "e1[2,1]", "0", "1", "", ""},
    {"f4[3,1]", "e1[2,2]", "0", "1", "", ""},
    {"f4[3,2]", "e1[1,1]", "0", "1", "", ""},
    {"f4[3,2]", "e1[1,2]", "0", "1", "", ""},
    {"f4[3,2]", "e1[2,1]", "0", "1", "", ""},
    {"f4[3,2]", "e1[2,2]", "0", "1", "", ""},
    {"f4[3,3]", "e1[1,1]", "0", "1", "", ""},
    {"f4[3,3]", "e1[1,2]", "0", "1", "", ""},
    {"f4[3,3]", "e1[2,1]", "0", "1", "", ""},
    {"f4[3,3]", "e1[2,2]", "0", "1", "", ""},
    {"f4[1,1]", "e2[1,1]", "0", "1", "", ""},
    {"f4[1,1]", "e2[1,2]", "0", "1", "", ""},
    {"f4[1,1]", "e2[1,3]", "0", "1", "", ""},
    {"f4[1,1]", "e2[1,4]", "0", "1", "", ""},
    {"f4[1,1]", "e2[1,5]", "0", "1", "", ""},
    {"f4[1,1]", "e2[1,6]", "0", "1", "", ""},
    {"f4[1,1]", "e2[2,1]", "0", "1", "", ""},
    {"f4[1,1]", "e2[2,2]", "0", "1", "", ""},
    {"f4[1,1]", "e2[2,3]", "0", "1", "", ""},
    {"f4[1,1]", "e2[2,4]", "0", "1", "", ""},
    {"f4[1,1]", "e2[2,5]", "0", "1", "", ""},
    {"f4[1,1]", "e2[2,6]", "0", "1", "", ""},
    {"f4[1,1]", "e2[3,1]", "0", "1", "", ""},
    {"f4[1,1]", "e2[3,2]", "0", "1", "", ""},
    {"f4[1,1]", "e2[3,3]", "0", "1", "", ""},
    {"f4[1,1]", "e2[3,4]", "0", "1", "", ""},
    {"f4[1,1]", "e2[3,5]", "0", "1", "", ""},
    {"f4[1,1]", "e2[3,6]", "0", "1", "", ""},
    {"f4[1,1]", "e2[4,1]", "0", "1", "", ""},
    {"f4[1,1]", "e2[4,2]", "0", "1", "", ""},
    {"f4[1,1]", "e2[4,3]", "0", "1", "", ""},
    {"f4[1,1]", "e2[4,4]", "0", "1", "", ""},
    {"f4[1,1]", "e2[4,5]", "0", "1", "", ""},
    {"f4[1,1]", "e2[4,6]", "0", "1", "", ""},
    {"f4[1,1]", "e2[5,1]", "0", "1", "", ""},
    {"f4[1,1]", "e2[5,2]", "0", "1", "", ""},
    {"f4[1,1]", "e2[5,3]", "0", "1", "", ""},
    {"f4[1,1]", "e2[5,4]", "0", "1", "", ""},
    {"f4[1,1]", "e2[5,5]", "0", "1", "", ""},
    {"f4[1,1]", "e2[5,6]", "0", "1", "", ""},
    {"f4[1,1]", "e2[6,1]", "0", "1", "", ""},
    {"f4[1,1]", "e2[6,2]", "0", "1", "", ""},
    {"f4[1,1]", "e2[6,3]", "0", "1", "", ""},
    {"f4[1,1]", "e2[6,4]", "0", "1", "", ""},
    {"f4[1,1]", "e2[6,5]", "0", "1", "", ""},
    {"f4[1,1]", "e2[6,6]", "0", "1", "", ""},
    {"f4[1,2]", "e2[1,1]", "0", "1", "", ""},
    {"f4[1,2]", "e2[1,2]", "0", "1", "", ""},
    {"f4[1,2]", "e2[1,3]", "0", "1", "", ""},
    {"f4[1,2]", "e2[1,4]", "0", "1", "", ""},
    {"f4[1,2]", "e2[1,5]", "0", "1", "", ""},
    {"f4[1,2]", "e2[1,6]", "0", "1", "", ""},
    {"f4[1,2]", "e2[2,1]", "0", "1", "", ""},
    {"f4[1,2]", "e2[2,2]", "0", "1", "", ""},
    {"f4[1,2]", "e2[2,3]", "0", "1", "", ""},
    {"f4[1,2]", "e2[2,4]", "0", "1", "", ""},
    {"f4[1,2]", "e2[2,5]", "0", "1", "", ""},
    {"f4[1,2]", "e2[2,6]", "0", "1", "", ""},
    {"f4[1,2]", "e2[3,1]", "0", "1", "", ""},
    {"f4[1,2]", "e2[3,2]", "0", "1", "", ""},
    {"f4[1,2]", "e2[3,3]", "0", "1", "", ""},
    {"f4[1,2]", "e2[3,4]", "0", "1", "", ""},
    {"f4[1,2]", "e2[3,5]", "0", "1", "", ""},
    {"f4[1,2]", "e2[3,6]", "0", "1", "", ""},
    {"f4[1,2]", "e2[4,1]", "0", "1", "", ""},
    {"f4[1,2]", "e2[4,2]", "0", "1", "", ""},
    {"f4[1,2]", "e2[4,3]", "0", "1", "", ""},
    {"f4[1,2]", "e2[4,4]", "0", "1", "", ""},
    {"f4[1,2]", "e2[4,5]", "0", "1", "", ""},
    {"f4[1,2]", "e2[4,6]", "0", "1", "", ""},
    {"f4[1,2]", "e2[5,1]", "0", "1", "", ""},
    {"f4[1,2]", "e2[5,2]", "0", "1", "", ""},
    {"f4[1,2]", "e2[5,3]", "0", "1", "", ""},
    {"f4[1,2]", "e2[5,4]", "0", "1", "", ""},
    {"f4[1,2]", "e2[5,5]", "0", "1", "", ""},
    {"f4[1,2]", "e2[5,6]", "0", "1", "", ""},
    {"f4[1,2]", "e2[6,1]", "0", "1", "", ""},
    {"f4[1,2]", "e2[6,2]", "0", "1", "", ""},
    {"f4[1,2]", "e2[6,3]", "0", "1", "", ""},
    {"f4[1,2]", "e2[6,4]", "0", "1", "", ""},
    {"f4[1,2]", "e2[6,5]", "0", "1", "", ""},
    {"f4[1,2]", "e2[6,6]", "0", "1", "", ""},
    {"f4[1,3]", "e2[1,1]", "0", "1", "", ""},
    {"f4[1,3]", "e2[1,2]", "0", "1", "", ""},
    {"f4[1,3]", "e2[1,3]", "0", "1", "", ""},
    {"f4[1,3]", "e2[1,4]", "0", "1", "", ""},
    {"f4[1,3]", "e2[1,5]", "0", "1", "", ""},
    {"f4[1,3]", "e2[1,6]", "0", "1", "", ""},
    {"f4[1,3]", "e2[2,1]", "0", "1", "", ""},
    {"f4[1,3]", "e2[2,2]", "0", "1", "", ""},
    {"f4[1,3]", "e2[2,3]", "0", "1", "", ""},
    {"f4[1,3]", "e2[2,4]", "0", "1", "", ""},
    {"f4[1,3]", "e2[2,5]", "0", "1", "", ""},
    {"f4[1,3]", "e2[2,6]", "0", "1", "", ""},
    {"f4[1,3]", "e2[3,1]", "0", "1", "", ""},
    {"f4[1,3]", "e2[3,2]", "0", "1", "", ""},
    {"f4[1,3]", "e2[3,3]", "0", "1", "", ""},
    {"f4[1,3]", "e2[3,4]", "0", "1", "", ""},
    {"f4[1,3]", "e2[3,5]", "0", "1", "", ""},
    {"f4[1,3]", "e2[3,6]", "0", "1", "", ""},
    {"f4[1,3]", "e2[4,1]", "0", "1", "", ""},
    {"f4[1,3]", "e2[4,2]", "0", "1", "", ""},
    {"f4[1,3]", "e2[4,3]", "0", "1", "", ""},
    {"f4[1,3]", "e2[4,4]", "0", "1", "", ""},
    {"f4[1,3]", "e2[4,5]", "0", "1", "", ""},
    {"f4[1,3]", "e2[4,6]", "0", "1", "", ""},
    {"f4[1,3]", "e2[5,1]", "0", "1", "", ""},
    {"f4[1,3]", "e2[5,2]", "0", "1", "", ""},
    {"f4[1,3]", "e2[5,3]", "0", "1", "", ""},
    {"f4[1,3]", "e2[5,4]", "0", "1", "", ""},
    {"f4[1,3]", "e2[5,5]", "0", "1", "", ""},
    {"f4[1,3]", "e2[5,6]", "0", "1", "", ""},
    {"f4[1,3]", "e2[6,1]", "0", "1", "", ""},
    {"f4[1,3]", "e2[6,2]", "0", "1", "", ""},
    {"f4[1,3]", "e2[6,3]", "0", "1", "", ""},
    {"f4[1,3]", "e2[6,4]", "0", "1", "", ""},
    {"f4[1,3]", "e2[6,5]", "0", "1", "", ""},
    {"f4[1,3]", "e2[6,6]", "0", "1", "", ""},
    {"f4[2,1]", "e2[1,1]", "0", "1", "", ""},
    {"f4[2,1]", "e2[1,2]", "0", "1", "", ""},
    {"f4[2,1]", "e2[1,3]", "0", "1", "", ""},
    {"f4[2,1]", "e2[1,4]", "0", "1", "", ""},
    {"f4[2,1]", "e2[1,5]", "0", "1", "", ""},
    {"f4[2,1]", "e2[1,6]", "0", "1", "", ""},
    {"f4[2,1]", "e2[2,1]", "0", "1", "", ""},
    {"f4[2,1]", "e2[2,2]", "0", "1", "", ""},
    {"f4[2,1]", "e2[2,3]", "0", "1", "", ""},
    {"f4[2,1]", "e2[2,4]", "0", "1", "", ""},
    {"f4[2,1]", "e2[2,5]", "0", "1", "", ""},
    {"f4[2,1]", "e2[2,6]", "0", "1", "", ""},
    {"f4[2,1]", "e2[3,1]", "0", "1", "", ""},
    {"f4[2,1]", "e2[3,2]", "0", "1", "", ""},
    {"f4[2,1]", "e2[3,3]", "0", "1", "", ""},
    {"f4[2,1]", "e2[3,4]", "0", "1", "", ""},
    {"f4[2,1]", "e2[3,5]", "0", "1", "", ""},
    {"f4[2,1]", "e2[3,6]", "0", "1", "", ""},
    {"f4[2,1]", "e2[4,1]", "0", "1", "", ""},
    {"f4[2,1]", "e2[4,2]", "0", "1", "", ""},
    {"f4[2,1]", "e2[4,3]", "0", "1", "", ""},
    {"f4[2,1]", "e2[4,4]", "0", "1", "", ""},
    {"f4[2,1]", "e2[4,5]", "0", "1", "", ""},
    {"f4[2,1]", "e2[4,6]", "0", "1", "", ""},
    {"f4[2,1]", "e2[5,1]", "0", "1", "", ""},
    {"f4[2,1]", "e2[5,2]", "0", "1", "", ""},
    {"f4[2,1]", "e2[5,3]", "0", "1", "", ""},
    {"f4[2,1]", "e2[5,4]", "0", "1", "", ""},
    {"f4[2,1]", "e2[5,5]", "0", "1", "", ""},
    {"f4[2,1]", "e2[5,6]", "0", "1", "", ""},
    {"f4[2,1]", "e2[6,1]", "0", "1", "", ""},
    {"f4[2,1]", "e2[6,2]", "0", "1", "", ""},
    {"f4[2,1]", "e2[6,3]", "0", "1", "", ""},
    {"f4[2,1]", "e2[6,4]", "0", "1", "", ""},
    {"f4[2,1]", "e2[6,5]", "0", "1", "", ""},
    {"f4[2,1]", "e2[6,6]", "0", "1", "", ""},
    {"f4[2,2]", "e2[1,1]", "0", "1", "", ""},
    {"f4[2,2]", "e2[1,2]", "0", "1", "", ""},
    {"f4[2,2]", "e2[1,3]", "0", "1", "", ""},
    {"f4[2,2]", "e2[1,4]", "0", "1", "", ""},
    {"f4[2,2]", "e2[1,5]", "0", "1", "", ""},
    {"f4[2,2]", "e2[1,6]", "0", "1", "", ""},
    {"f4[2,2]", "e2[2,1]", "0", "1", "", ""},
    {"f4[2,2]", "e2[2,2]", "0", "1", "", ""},
    {"f4[2,2]", "e2[2,3]", "0", "1", "", ""},
    {"f4[2,2]", "e2[2,4]", "0", "1", "", ""},
    {"f4[2,2]", "e2[2,5]", "0", "1", "", ""},
    {"f4[2,2]", "e2[2,6]", "0", "1", "", ""},
    {"f4[2,2]", "e2[3,1]", "0", "1", "", ""},
    {"f4[2,2]", "e2[3,2]", "0", "1", "", ""},
    {"f4[2,2]", "e2[3,3]", "0", "1", "", ""},
    {"f4[2,2]", "e2[3,4]", "0", "1", "", ""},
    {"f4[2,2]", "e2[3,5]", "0", "1", "", ""},
    {"f4[2,2]", "e2[3,6]", "0", "1", "", ""},
    {"f4[2,2]", "e2[4,1]", "0", "1", "", ""},
    {"f4[2,2]", "e2[4,2]", "0", "1", "", ""},
    {"f4[2,2]", "e2[4,3]", "0", "1", "", ""},
    {"f4[2,2]", "e2[4,4]", "0", "1", "", ""},
    {"f4[2,2]", "e2[4,5]", "0", "1", "", ""},
    {"f4[2,2]", "e2[4,6]", "0", "1", "", ""},
    {"f4[2,2]", "e2[5,1]", "0", "1", "", ""},
    {"f4[2,2]", "e2[5,2]", "0", "1", "", ""},
    {"f4[2,2]", "e2[5,3]", "0", "1", "", ""},
    {"f4[2,2]", "e2[5,4]", "0", "1", "", ""},
    {"f4[2,2]", "e2[5,5]", "0", "1", "", ""},
    {"f4[2,2]", "e2[5,6]", "0", "1", "", ""},
    {"f4[2,2]", "e2[6,1]", "0", "1", "", ""},
    {"f4[2,2]", "e2[6,2]", "0", "1", "", ""},
    {"f4[2,2]", "e2[6,3]", "0", "1", "", ""},
    {"f4[2,2]", "e2[6,4]", "0", "1", "", ""},
    {"f4[2,2]", "e2[6,5]", "0", "1", "", ""},
    {"f4[2,2]", "e2[6,6]", "0", "1", "", ""},
    {"f4[2,3]", "e2[1,1]", "0", "1", "", ""},
    {"f4[2,3]", "e2[1,2]", "0", "1", "", ""},
    {"f4[2,3]", "e2[1,3]", "0", "1", "", ""},
    {"f4[2,3]", "e2[1,4]", "0", "1", "", ""},
    {"f4[2,3]", "e2[1,5]", "0", "1", "", ""},
    {"f4[2,3]", "e2[1,6]", "0", "1", "", ""},
    {"f4[2,3]", "e2[2,1]", "0", "1", "", ""},
    {"f4[2,3]", "e2[2,2]", "0", "1", "", ""},
    {"f4[2,3]", "e2[2,3]", "0", "1", "", ""},
    {"f4[2,3]", "e2[2,4]", "0", "1", "", ""},
    {"f4[2,3]", "e2[2,5]", "0", "1", "", ""},
    {"f4[2,3]", "e2[2,6]", "0", "1", "", ""},
    {"f4[2,3]", "e2[3,1]", "0", "1", "", ""},
    {"f4[2,3]", "e2[3,2]", "0", "1", "", ""},
    {"f4[2,3]", "e2[3,3]", "0", "1", "", ""},
    {"f4[2,3]", "e2[3,4]", "0", "1", "", ""},
    {"f4[2,3]", "e2[3,5]", "0", "1", "", ""},
    {"f4[2,3]", "e2[3,6]", "0", "1", "", ""},
    {"f4[2,3]", "e2[4,1]", "0", "1", "", ""},
    {"f4[2,3]", "e2[4,2]", "0", "1", "", ""},
    {"f4[2,3]", "e2[4,3]", "0", "1", "", ""},
    {"f4[2,3]", "e2[4,4]", "0", "1", "", ""},
    {"f4[2,3]", "e2[4,5]", "0", "1", "", ""},
    {"f4[2,3]", "e2[4,6]", "0", "1", "", ""},
    {"f4[2,3]", "e2[5,1]", "0", "1", "", ""},
    {"f4[2,3]", "e2[5,2]", "0", "1", "", ""},
    {"f4[2,3]", "e2[5,3]", "0", "1", "", ""},
    {"f4[2,3]", "e2[5,4]", "0", "1", "", ""},
    {"f4[2,3]", "e2[5,5]", "0", "1", "", ""},
    {"f4[2,3]", "e2[5,6]", "0", "1", "", ""},
    {"f4[2,3]", "e2[6,1]", "0", "1", "", ""},
    {"f4[2,3]", "e2[6,2]", "0", "1", "", ""},
    {"f4[2,3]", "e2[6,3]", "0", "1", "", ""},
    {"f4[2,3]", "e2[6,4]", "0", "1", "", ""},
    {"f4[2,3]", "e2[6,5]", "0", "1", "", ""},
    {"f4[2,3]", "e2[6,6]", "0", "1", "", ""},
    {"f4[3,1]", "e2[1,1]", "0", "1", "", ""},
    {"f4[3,1]", "e2[1,2]", "0", "1", "", ""},
    {"f4[3,1]", "e2[1,3]", "0", "1", "", ""},
    {"f4[3,1]", "e2[1,4]", "0", "1", "", ""},
    {"f4[3,1]", "e2[1,5]", "0", "1", "", ""},
    {"f4[3,1]", "e2[1,6]", "0", "1", "", ""},
    {"f4[3,1]", "e2[2,1]", "0", "1", "", ""},
    {"f4[3,1]", "e2[2,2]", "0", "1", "", ""},
    {"f4[3,1]", "e2[2,3]", "0", "1", "", ""},
    {"f4[3,1]", "e2[2,4]", "0", "1", "", ""},
    {"f4[3,1]", "e2[2,5]", "0", "1", "", ""},
    {"f4[3,1]", "e2[2,6]", "0", "1", "", ""},
    {"f4[3,1]", "e2[3,1]", "0", "1", "", ""},
    {"f4[3,1]", "e2[3,2]", "0", "1", "", ""},
    {"f4[3,1]", "e2[3,3]", "0", "1", "", ""},
    {"f4[3,1]", "e2[3,4]", "0", "1", "", ""},
    {"f4[3,1]", "e2[3,5]", "0", "1", "", ""},
    {"f4[3,1]", "e2[3,6]", "0", "1", "", ""},
    {"f4[3,1]", "e2[4,1]", "0", "1", "", ""},
    {"f4[3,1]", "e2[4,2]", "0", "1", "", ""},
    {"f4[3,1]", "e2[4,3]", "0", "1", "", ""},
    {"f4[3,1]", "e2[4,4]", "0", "1", "", ""},
    {"f4[3,1]", "e2[4,5]", "0", "1", "", ""},
    {"f4[3,1]", "e2[4,6]", "0", "1", "", ""},
    {"f4[3,1]", "e2[5,1]", "0", "1", "", ""},
    {"f4[3,1]", "e2[5,2]", "0", "1", "", ""},
    {"f4[3,1]", "e2[5,3]", "0", "1", "", ""},
    {"f4[3,1]", "e2[5,4]", "0", "1", "", ""},
    {"f4[3,1]", "e2[5,5]", "0", "1", "", ""},
    {"f4[3,1]", "e2[5,6]", "0", "1", "", ""},
    {"f4[3,1]", "e2[6,1]", "0", "1", "", ""},
    {"f4[3,1]", "e2[6,2]", "0", "1", "", ""},
    {"f4[3,1]", "e2[6,3]", "0", "1", "", ""},
    {"f4[3,1]", "e2[6,4]", "0", "1", "", ""},
    {"f4[3,1]", "e2[6,5]", "0", "1", "", ""},
    {"f4[3,1]", "e2[6,6]", "0", "1", "", ""},
    {"f4[3,2]", "e2[1,1]", "0", "1", "", ""},
    {"f4[3,2]", "e2[1,2]", "0", "1", "", ""},
    {"f4[3,2]", "e2[1,3]", "0", "1", "", ""},
    {"f4[3,2]", "e2[1,4]", "0", "1", "", ""},
    {"f4[3,2]", "e2[1,5]", "0", "1", "", ""},
    {"f4[3,2]", "e2[1,6]", "0", "1", "", ""},
    {"f4[3,2]", "e2[2,1]", "0", "1", "", ""},
    {"f4[3,2]", "e2[2,2]", "0", "1", "", ""},
    {"f4[3,2]", "e2[2,3]", "0", "1", "", ""},
    {"f4[3,2]", "e2[2,4]", "0", "1", "", ""},
    {"f4[3,2]", "e2[2,5]", "0", "1", "", ""},
    {"f4[3,2]", "e2[2,6]", "0", "1", "", ""},
    {"f4[3,2]", "e2[3,1]", "0", "1", "", ""},
    {"f4[3,2]", "e2[3,2]", "0", "1", "", ""},
    {"f4[3,2]", "e2[3,3]", "0", "1", "", ""},
    {"f4[3,2]", "e2[3,4]", "0", "1", "", ""},
    {"f4[3,2]", "e2[3,5]", "0", "1", "", ""},
    {"f4[3,2]", "e2[3,6]", "0", "1", "", ""},
    {"f4[3,2]", "e2[4,1]", "0", "1", "", ""},
    {"f4[3,2]", "e2[4,2]", "0", "1", "", ""},
    {"f4[3,2]", "e2[4,3]", "0", "1", "", ""},
    {"f4[3,2]", "e2[4,4]", "0", "1", "", ""},
    {"f4[3,2]", "e2[4,5]", "0", "1", "", ""},
    {"f4[3,2]", "e2[4,6]", "0", "1", "", ""},
    {"f4[3,2]", "e2[5,1]", "0", "1", "", ""},
    {"f4[3,2]", "e2[5,2]", "0", "1", "", ""},
    {"f4[3,2]", "e2[5,3]", "0", "1", "", ""},
    {"f4[3,2]", "e2[5,4]", "0", "1", "", ""},
    {"f4[3,2]", "e2[5,5]", "0", "1", "", ""},
    {"f4[3,2]", "e2[5,6]", "0", "1", "", ""},
    {"f4[3,2]", "e2[6,1]", "0", "1", "", ""},
    {"f4[3,2]", "e2[6,2]", "0", "1", "", ""},
    {"f4[3,2]", "e2[6,3]", "0", "1", "", ""},
    {"f4[3,2]", "e2[6,4]", "0", "1", "", ""},
    {"f4[3,2]", "e2[6,5]", "0", "1", "", ""},
    {"f4[3,2]", "e2[6,6]", "0", "1", "", ""},
    {"f4[3,3]", "e2[1,1]", "0", "1", "", ""},
    {"f4[3,3]", "e2[1,2]", "0", "1", "", ""},
    {"f4[3,3]", "e2[1,3]", "0", "1", "", ""},
    {"f4[3,3]", "e2[1,4]", "0", "1", "", ""},
    {"f4[3,3]", "e2[1,5]", "0", "1", "", ""},
    {"f4[3,3]", "e2[1,6]", "0", "1", "", ""},
    {"f4[3,3]", "e2[2,1]", "0", "1", "", ""},
    {"f4[3,3]", "e2[2,2]", "0", "1", "", ""},
    {"f4[3,3]", "e2[2,3]", "0", "1", "", ""},
    {"f4[3,3]", "e2[2,4]", "0", "1", "", ""},
    {"f4[3,3]", "e2[2,5]", "0", "1", "", ""},
    {"f4[3,3]", "e2[2,6]", "0", "1", "", ""},
    {"f4[3,3]", "e2[3,1]", "0", "1", "", ""},
    {"f4[3,3]", "e2[3,2]", "0", "1", "", ""},
    {"f4[3,3]", "e2[3,3]", "0", "1", "", ""},
    {"f4[3,3]", "e2[3,4]", "0", "1", "", ""},
    {"f4[3,3]", "e2[3,5]", "0", "1", "", ""},
    {"f4[3,3]", "e2[3,6]", "0", "1", "", ""},
    {"f4[3,3]", "e2[4,1]", "0", "1", "", ""},
    {"f4[3,3]", "e2[4,2]", "0", "1", "", ""},
    {"f4[3,3]", "e2[4,3]", "0", "1", "", ""},
    {"f4[3,3]", "e2[4,4]", "0", "1", "", ""},
    {"f4[3,3]", "e2[4,5]", "0", "1", "", ""},
    {"f4[3,3]", "e2[4,6]", "0", "1", "", ""},
    {"f4[3,3]", "e2[5,1]", "0", "1", "", ""},
    {"f4[3,3]", "e2[5,2]", "0", "1", "", ""},
    {"f4[3,3]", "e2[5,3]", "0", "1", "", ""},
    {"f4[3,3]", "e2[5,4]", "0", "1", "", ""},
    {"f4[3,3]", "e2[5,5]", "0", "1", "", ""},
    {"f4[3,3]", "e2[5,6]", "0", "1", "", ""},
    {"f4[3,3]", "e2[6,1]", "0", "1", "", ""},
    {"f4[3,3]", "e2[6,2]", "0", "1", "", ""},
    {"f4[3,3]", "e2[6,3]", "0", "1", "", ""},
    {"f4[3,3]", "e2[6,4]", "0", "1", "", ""},
    {"f4[3,3]", "e2[6,5]", "0", "1", "", ""},
    {"f4[3,3]", "e2[6,6]", "0", "1", "", ""},
    {"f5", "e1[1,1]", "0", "1", "", ""},
    {"f5", "e1[1,2]", "0", "1", "", ""},
    {"f5", "e1[2,1]", "0", "1", "", ""},
    {"f5", "e1[2,2]", "0", "1", "", ""},
    {"f5", "e2[1,1]", "0", "1", "", ""},
    {"f5", "e2[1,2]", "0", "1", "", ""},
    {"f5", "e2[1,3]", "0", "1", "", ""},
    {"f5", "e2[1,4]", "0", "1", "", ""},
    {"f5", "e2[1,5]", "0", "1", "", ""},
    {"f5", "e2[1,6]", "0", "1", "", ""},
    {"f5", "e2[2,1]", "0", "1", "", ""},
    {"f5", "e2[2,2]", "0", "1", "", ""},
    {"f5", "e2[2,3]", "0", "1", "", ""},
    {"f5", "e2[2,4]", "0", "1", "", ""},
    {"f5", "e2[2,5]", "0", "1", "", ""},
    {"f5", "e2[2,6]", "0", "1", "", ""},
    {"f5", "e2[3,1]", "0", "1", "", ""},
    {"f5", "e2[3,2]", "0", "1", "", ""},
    {"f5", "e2[3,3]", "0", "1", "", ""},
    {"f5", "e2[3,4]", "0", "1", "", ""},
    {"f5", "e2[3,5]", "0", "1", "", ""},
    {"f5", "e2[3,6]", "0", "1", "", ""},
    {"f5", "e2[4,1]", "0", "1", "", ""},
    {"f5", "e2[4,2]", "0", "1", "", ""},
    {"f5", "e2[4,3]", "0", "1", "", ""},
    {"f5", "e2[4,4]", "0", "1", "", ""},
    {"f5", "e2[4,5]", "0", "1", "", ""},
    {"f5", "e2[4,6]", "0", "1", "", ""},
    {"f5", "e2[5,1]", "0", "1", "", ""},
    {"f5", "e2[5,2]", "0", "1", "", ""},
    {"f5", "e2[5,3]", "0", "1", "", ""},
    {"f5", "e2[5,4]", "0", "1", "", ""},
    {"f5", "e2[5,5]", "0", "1", "", ""},
    {"f5", "e2[5,6]", "0", "1", "", ""},
    {"f5", "e2[6,1]", "0", "1", "", ""},
    {"f5", "e2[6,2]", "0", "1", "", ""},
    {"f5", "e2[6,3]", "0", "1", "", ""},
    {"f5", "e2[6,4]", "0", "1", "", ""},
    {"f5", "e2[6,5]", "0", "1", "", ""},
    {"f5", "e2[6,6]", "0", "1", "", ""},
    {"f5", "e3[1,1]", "0", "1", "", ""},
    {"f5", "e3[1,2]", "0", "1", "", ""},
    {"f5", "e3[1,3]", "0", "1", "", ""},
    {"f5", "e3[1,4]", "0", "1", "", ""},
    {"f5", "e3[2,1]", "0", "1", "", ""},
    {"f5", "e3[2,2]", "0", "1", "", ""},
    {"f5", "e3[2,3]", "0", "1", "", ""},
    {"f5", "e3[2,4]", "0", "1", "", ""},
    {"f5", "e3[3,1]", "0", "1", "", ""},
    {"f5", "e3[3,2]", "0", "1", "", ""},
    {"f5", "e3[3,3]", "0", "1", "", ""},
    {"f5", "e3[3,4]", "0", "1", "", ""},
    {"f5", "e3[4,1]", "0", "1", "", ""},
    {"f5", "e3[4,2]", "0", "1", "", ""},
    {"f5", "e3[4,3]", "0", "1", "", ""},
    {"f5", "e3[4,4]", "0", "1", "", ""},
    {"f5", "e4[2,1]", "0", "1", "", ""},
    {"f5", "e4[2,2]", "0", "1", "", ""},
    {"f4[1,1]", "e4[1,1]", "1", "1", "f4[1,2]", "e4[2,1]"},
    {"f4[1,1]", "e4[1,2]", "1", "1", "f4[1,2]", "e4[2,2]"},
    {"f4[2,1]", "e4[1,1]", "1", "1", "f4[2,2]", "e4[2,1]"},
    {"f4[2,1]", "e4[1,2]", "1", "1", "f4[2,2]", "e4[2,2]"},
    {"f4[3,1]", "e4[1,1]", "1", "1", "f4[3,2]", "e4[2,1]"},
    {"f4[3,1]", "e4[1,2]", "1", "1", "f4[3,2]", "e4[2,2]"},
    {"f4[1,1]", "e4[2,1]", "0", "1", "", ""},
    {"f4[1,1]", "e4[2,2]", "0", "1", "", ""},
    {"f4[1,2]", "e4[1,1]", "0", "1", "", ""},
    {"f4[1,2]", "e4[1,2]", "0", "1", "", ""},
    {"f4[1,3]", "e4[1,1]", "0", "1", "", ""},
    {"f4[1,3]", "e4[1,2]", "0", "1", "", ""},
    {"f4[1,3]", "e4[2,1]", "0", "1", "", ""},
    {"f4[1,3]", "e4[2,2]", "0", "1", "", ""},
    {"f4[2,1]", "e4[2,1]", "0", "1", "", ""},
    {"f4[2,1]", "e4[2,2]", "0", "1", "", ""},
    {"f4[2,2]", "e4[1,1]", "0", "1", "", ""},
    {"f4[2,2]", "e4[1,2]", "0", "1", "", ""},
    {"f4[2,3]", "e4[1,1]", "0", "1", "", ""},
    {"f4[2,3]", "e4[1,2]", "0", "1", "", ""},
    {"f4[2,3]", "e4[2,1]", "0", "1", "", ""},
    {"f4[2,3]", "e4[2,2]", "0", "1", "", ""},
    {"f4[3,1]", "e4[2,1]", "0", "1", "", ""},
    {"f4[3,1]", "e4[2,2]", "0", "1", "", ""},
    {"f4[3,2]", "e4[1,1]", "0", "1", "", ""},
    {"f4[3,2]", "e4[1,2]", "0", "1", "", ""},
    {"f4[3,3]", "e4[1,1]", "0", "1", "", ""},
    {"f4[3,3]", "e4[1,2]", "0", "1", "", ""},
    {"f4[3,3]", "e4[2,1]", "0", "1", "", ""},
    {"f4[3,3]", "e4[2,2]", "0", "1", "", ""},
    {"f4[1,1]", "e3[1,1]", "1", "1", "f4[1,2]", "e3[2,1]"},
    {"f4[1,2]", "e3[2,1]", "1", "1", "f4[1,3]", "e3[3,1]"},
    {"f4[1,1]", "e3[1,2]", "1", "1", "f4[1,2]", "e3[2,2]"},
    {"f4[1,2]", "e3[2,2]", "1", "1", "f4[1,3]", "e3[3,2]"},
    {"f4[1,1]", "e3[1,3]", "1", "1", "f4[1,2]", "e3[2,3]"},
    {"f4[1,2]", "e3[2,3]", "1", "1", "f4[1,3]", "e3[3,3]"},
    {"f4[1,1]", "e3[1,4]", "1", "1", "f4[1,2]", "e3[2,4]"},
    {"f4[1,2]", "e3[2,4]", "1", "1", "f4[1,3]", "e3[3,4]"},
    {"f4[2,1]", "e3[1,1]", "1", "1", "f4[2,2]", "e3[2,1]"},
    {"f4[2,2]", "e3[2,1]", "1", "1", "f4[2,3]", "e3[3,1]"},
    {"f4[2,1]", "e3[1,2]", "1", "1", "f4[2,2]", "e3[2,2]"},
    {"f4[2,2]", "e3[2,2]", "1", "1", "f4[2,3]", "e3[3,2]"},
    {"f4[2,1]", "e3[1,3]", "1", "1", "f4[2,2]", "e3[2,3]"},
    {"f4[2,2]", "e3[2,3]", "1", "1", "f4[2,3]", "e3[3,3]"},
    {"f4[2,1]", "e3[1,4]", "1", "1", "f4[2,2]", "e3[2,4]"},
    {"f4[2,2]", "e3[2,4]", "1", "1", "f4[2,3]", "e3[3,4]"},
    {"f4[3,1]", "e3[1,1]", "1", "1", "f4[3,2]", "e3[2,1]"},
    {"f4[3,2]", "e3[2,1]", "1", "1", "f4[3,3]", "e3[3,1]"},
    {"f4[3,1]", "e3[1,2]", "1", "1", "f4[3,2]", "e3[2,2]"},
    {"f4[3,2]", "e3[2,2]", "1", "1", "f4[3,3]", "e3[3,2]"},
    {"f4[3,1]", "e3[1,3]", "1", "1", "f4[3,2]", "e3[2,3]"},
    {"f4[3,2]", "e3[2,3]", "1", "1", "f4[3,3]", "e3[3,3]"},
    {"f4[3,1]", "e3[1,4]", "1", "1", "f4[3,2]", "e3[2,4]"},
    {"f4[3,2]", "e3[2,4]", "1", "1", "f4[3,3]", "e3[3,4]"},
    {"f4[1,1]", "e3[2,1]", "0", "1", "", ""},
    {"f4[1,1]", "e3[2,2]", "0", "1", "", ""},
    {"f4[1,1]", "e3[2,3]", "0", "1", "", ""},
    {"f4[1,1]", "e3[2,4]", "0", "1", "", ""},
    {"f4[1,1]", "e3[3,1]", "0", "1", "", ""},
    {"f4[1,1]", "e3[3,2]", "0", "1", "", ""},
    {"f4[1,1]", "e3[3,3]", "0", "1", "", ""},
    {"f4[1,1]", "e3[3,4]", "0", "1", "", ""},
    {"f4[1,1]", "e3[4,1]", "0", "1", "", ""},
    {"f4[1,1]", "e3[4,2]", "0", "1", "", ""},
    {"f4[1,1]", "e3[4,3]", "0", "1", "", ""},
    {"f4[1,1]", "e3[4,4]", "0", "1", "", ""},
    {"f4[1,2]", "e3[1,1]", "0", "1", "", ""},
    {"f4[1,2]", "e3[1,2]", "0", "1", "", ""},
    {"f4[1,2]", "e3[1,3]", "0", "1", "", ""},
    {"f4[1,2]", "e3[1,4]", "0", "1", "", ""},
    {"f4[1,2]", "e3[3,1]", "0", "1", "", ""},
    {"f4[1,2]", "e3[3,2]", "0", "1", "", ""},
    {"f4[1,2]", "e3[3,3]", "0", "1", "", ""},
    {"f4[1,2]", "e3[3,4]", "0", "1", "", ""},
    {"f4[1,2]", "e3[4,1]", "0", "1", "", ""},
    {"f4[1,2]", "e3[4,2]", "0", "1", "", ""},
    {"f4[1,2]", "e3[4,3]", "0", "1", "", ""},
    {"f4[1,2]", "e3[4,4]", "0", "1", "", ""},
    {"f4[1,3]", "e3[1,1]", "0", "1", "", ""},
    {"f4[1,3]", "e3[1,2]", "0", "1", "", ""},
    {"f4[1,3]", "e3[1,3]", "0", "1", "", ""},
    {"f4[1,3]", "e3[1,4]", "0", "1", "", ""},
    {"f4[1,3]", "e3[2,1]", "0", "1", "", ""},
    {"f4[1,3]", "e3[2,2]", "0", "1", "", ""},
    {"f4[1,3]", "e3[2,3]", "0", "1", "", ""},
    {"f4[1,3]", "e3[2,4]", "0", "1", "", ""},
    {"f4[1,3]", "e3[4,1]", "0", "1", "", ""},
    {"f4[1,3]", "e3[4,2]", "0", "1", "", ""},
    {"f4[1,3]", "e3[4,3]", "0", "1", "", ""},
    {"f4[1,3]", "e3[4,4]", "0", "1", "", ""},
    {"f4[2,1]", "e3[2,1]", "0", "1", "", ""},
    {"f4[2,1]", "e3[2,2]", "0", "1", "", ""},
    {"f4[2,1]", "e3[2,3]", "0", "1", "", ""},
    {"f4[2,1]", "e3[2,4]", "0", "1", "", ""},
    {"f4[2,1]", "e3[3,1]", "0", "1", "", ""},
    {"f4[2,1]", "e3[3,2]", "0", "1", "", ""},
    {"f4[2,1]", "e3[3,3]", "0", "1", "", ""},
    {"f4[2,1]", "e3[3,4]", "0", "1", "", ""},
    {"f4[2,1]", "e3[4,1]", "0", "1", "", ""},
    {"f4[2,1]", "e3[4,2]", "0", "1", "", ""},
    {"f4[2,1]", "e3[4,3]", "0", "1", "", ""},
    {"f4[2,1]", "e3[4,4]", "0", "1", "", ""},
    {"f4[2,2]", "e3[1,1]", "0", "1", "", ""},
    {"f4[2,2]", "e3[1,2]", "0", "1", "", ""},
    {"f4[2,2]", "e3[1,3]", "0", "1", "", ""},
    {"f4[2,2]", "e3[1,4]", "0", "1", "", ""},
    {"f4[2,2]", "e3[3,1]", "0", "1", "", ""},
    {"f4[2,2]", "e3[3,2]", "0", "1", "", ""},
    {"f4[2,2]", "e3[3,3]", "0", "1", "", ""},
    {"f4[2,2]", "e3[3,4]", "0", "1", "", ""},
    {"f4[2,2]", "e3[4,1]", "0", "1", "", ""},
    {"f4[2,2]", "e3[4,2]", "0", "1", "", ""},
    {"f4[2,2]", "e3[4,3]", "0", "1", "", ""},
    {"f4[2,2]", "e3[4,4]", "0", "1", "", ""},
    {"f4[2,3]", "e3[1,1]", "0", "1", "", ""},
    {"f4[2,3]", "e3[1,2]", "0", "1", "", ""},
    {"f4[2,3]", "e3[1,3]", "0", "1", "", ""},
    {"f4[2,3]", "e3[1,4]", "0", "1", "", ""},
    {"f4[2,3]", "e3[2,1]", "0", "1", "", ""},
    {"f4[2,3]", "e3[2,2]", "0", "1", "", ""},
    {"f4[2,3]", "e3[2,3]", "0", "1", "", ""},
    {"f4[2,3]", "e3[2,4]", "0", "1", "", ""},
    {"f4[2,3]", "e3[4,1]", "0", "1", "", ""},
    {"f4[2,3]", "e3[4,2]", "0", "1", "", ""},
    {"f4[2,3]", "e3[4,3]", "0", "1", "", ""},
    {"f4[2,3]", "e3[4,4]", "0", "1", "", ""},
    {"f4[3,1]", "e3[2,1]", "0", "1", "", ""},
    {"f4[3,1]", "e3[2,2]", "0", "1", "", ""},
    {"f4[3,1]", "e3[2,3]", "0", "1", "", ""},
    {"f4[3,1]", "e3[2,4]", "0", "1", "", ""},
    {"f4[3,1]", "e3[3,1]", "0", "1", "", ""},
    {"f4[3,1]", "e3[3,2]", "0", "1", "", ""},
    {"f4[3,1]", "e3[3,3]", "0", "1", "", ""},
    {"f4[3,1]", "e3[3,4]", "0", "1", "", ""},
    {"f4[3,1]", "e3[4,1]", "0", "1", "", ""},
    {"f4[3,1]", "e3[4,2]", "0", "1", "", ""},
    {"f4[3,1]", "e3[4,3]", "0", "1", "", ""},
    {"f4[3,1]", "e3[4,4]", "0", "1", "", ""},
    {"f4[3,2]", "e3[1,1]", "0", "1", "", ""},
    {"f4[3,2]", "e3[1,2]", "0", "1", "", ""},
    {"f4[3,2]", "e3[1,3]", "0", "1", "", ""},
    {"f4[3,2]", "e3[1,4]", "0", "1", "", ""},
    {"f4[3,2]", "e3[3,1]", "0", "1", "", ""},
    {"f4[3,2]", "e3[3,2]", "0", "1", "", ""},
    {"f4[3,2]", "e3[3,3]", "0", "1", "", ""},
    {"f4[3,2]", "e3[3,4]", "0", "1", "", ""},
    {"f4[3,2]", "e3[4,1]", "0", "1", "", ""},
    {"f4[3,2]", "e3[4,2]", "0", "1", "", ""},
    {"f4[3,2]", "e3[4,3]", "0", "1", "", ""},
    {"f4[3,2]", "e3[4,4]", "0", "1", "", ""},
    {"f4[3,3]", "e3[1,1]", "0", "1", "", ""},
    {"f4[3,3]", "e3[1,2]", "0", "1", "", ""},
    {"f4[3,3]", "e3[1,3]", "0", "1", "", ""},
    {"f4[3,3]", "e3[1,4]", "0", "1", "", ""},
    {"f4[3,3]", "e3[2,1]", "0", "1", "", ""},
    {"f4[3,3]", "e3[2,2]", "0", "1", "", ""},
    {"f4[3,3]", "e3[2,3]", "0", "1", "", ""},
    {"f4[3,3]", "e3[2,4]", "0", "1", "", ""},
    {"f4[3,3]", "e3[4,1]", "0", "1", "", ""},
    {"f4[3,3]", "e3[4,2]", "0", "1", "", ""},
    {"f4[3,3]", "e3[4,3]", "0", "1", "", ""},
    {"f4[3,3]", "e3[4,4]", "0", "1", "", ""},
    {"f3[1,1]", "e3[1,1]", "1", "1", "f3[1,2]", "e3[2,1]"},
    {"f3[1,2]", "e3[2,1]", "1", "1", "f3[1,3]", "e3[3,1]"},
    {"f3[1,3]", "e3[3,1]", "1", "1", "f3[1,4]", "e3[4,1]"},
    {"f3[1,1]", "e3[1,2]", "1", "1", "f3[1,2]", "e3[2,2]"},
    {"f3[1,2]", "e3[2,2]", "1", "1", "f3[1,3]", "e3[3,2]"},
    {"f3[1,3]", "e3[3,2]", "1", "1", "f3[1,4]", "e3[4,2]"},
    {"f3[1,1]", "e3[1,3]", "1", "1", "f3[1,2]", "e3[2,3]"},
    {"f3[1,2]", "e3[2,3]", "1", "1", "f3[1,3]", "e3[3,3]"},
    {"f3[1,3]", "e3[3,3]", "1", "1", "f3[1,4]", "e3[4,3]"},
    {"f3[1,1]", "e3[1,4]", "1", "1", "f3[1,2]", "e3[2,4]"},
    {"f3[1,2]", "e3[2,4]", "1", "1", "f3[1,3]", "e3[3,4]"},
    {"f3[1,3]", "e3[3,4]", "1", "1", "f3[1,4]", "e3[4,4]"},
    {"f3[2,1]", "e3[1,1]", "1", "1", "f3[2,2]", "e3[2,1]"},
    {"f3[2,2]", "e3[2,1]", "1", "1", "f3[2,3]", "e3[3,1]"},
    {"f3[2,3]", "e3[3,1]", "1", "1", "f3[2,4]", "e3[4,1]"},
    {"f3[2,1]", "e3[1,2]", "1", "1", "f3[2,2]", "e3[2,2]"},
    {"f3[2,2]", "e3[2,2]", "1", "1", "f3[2,3]", "e3[3,2]"},
    {"f3[2,3]", "e3[3,2]", "1", "1", "f3[2,4]", "e3[4,2]"},
    {"f3[2,1]", "e3[1,3]", "1", "1", "f3[2,2]", "e3[2,3]"},
    {"f3[2,2]", "e3[2,3]", "1", "1", "f3[2,3]", "e3[3,3]"},
    {"f3[2,3]", "e3[3,3]", "1", "1", "f3[2,4]", "e3[4,3]"},
    {"f3[2,1]", "e3[1,4]", "1", "1", "f3[2,2]", "e3[2,4]"},
    {"f3[2,2]", "e3[2,4]", "1", "1", "f3[2,3]", "e3[3,4]"},
    {"f3[2,3]", "e3[3,4]", "1", "1", "f3[2,4]", "e3[4,4]"},
    {"f3[3,1]", "e3[1,1]", "1", "1", "f3[3,2]", "e3[2,1]"},
    {"f3[3,2]", "e3[2,1]", "1", "1", "f3[3,3]", "e3[3,1]"},
    {"f3[3,3]", "e3[3,1]", "1", "1", "f3[3,4]", "e3[4,1]"},
    {"f3[3,1]", "e3[1,2]", "1", "1", "f3[3,2]", "e3[2,2]"},
    {"f3[3,2]", "e3[2,2]", "1", "1", "f3[3,3]", "e3[3,2]"},
    {"f3[3,3]", "e3[3,2]", "1", "1", "f3[3,4]", "e3[4,2]"},
    {"f3[3,1]", "e3[1,3]", "1", "1", "f3[3,2]", "e3[2,3]"},
    {"f3[3,2]", "e3[2,3]", "1", "1", "f3[3,3]", "e3[3,3]"},
    {"f3[3,3]", "e3[3,3]", "1", "1", "f3[3,4]", "e3[4,3]"},
    {"f3[3,1]", "e3[1,4]", "1", "1", "f3[3,2]", "e3[2,4]"},
    {"f3[3,2]", "e3[2,4]", "1", "1", "f3[3,3]", "e3[3,4]"},
    {"f3[3,3]", "e3[3,4]", "1", "1", "f3[3,4]", "e3[4,4]"},
    {"f3[4,1]", "e3[1,1]", "1", "1", "f3[4,2]", "e3[2,1]"},
    {"f3[4,2]", "e3[2,1]", "1", "1", "f3[4,3]", "e3[3,1]"},
    {"f3[4,3]", "e3[3,1]", "1", "1", "f3[4,4]", "e3[4,1]"},
    {"f3[4,1]", "e3[1,2]", "1", "1", "f3[4,2]", "e3[2,2]"},
    {"f3[4,2]", "e3[2,2]", "1", "1", "f3[4,3]", "e3[3,2]"},
    {"f3[4,3]", "e3[3,2]", "1", "1", "f3[4,4]", "e3[4,2]"},
    {"f3[4,1]", "e3[1,3]", "1", "1", "f3[4,2]", "e3[2,3]"},
    {"f3[4,2]", "e3[2,3]", "1", "1", "f3[4,3]", "e3[3,3]"},
    {"f3[4,3]", "e3[3,3]", "1", "1", "f3[4,4]", "e3[4,3]"},
    {"f3[4,1]", "e3[1,4]", "1", "1", "f3[4,2]", "e3[2,4]"},
    {"f3[4,2]", "e3[2,4]", "1", "1", "f3[4,3]", "e3[3,4]"},
    {"f3[4,3]", "e3[3,4]", "1", "1", "f3[4,4]", "e3[4,4]"},
    {"f3[5,1]", "e3[1,1]", "1", "1", "f3[5,2]", "e3[2,1]"},
    {"f3[5,2]", "e3[2,1]", "1", "1", "f3[5,3]", "e3[3,1]"},
    {"f3[5,3]", "e3[3,1]", "1", "1", "f3[5,4]", "e3[4,1]"},
    {"f3[5,1]", "e3[1,2]", "1", "1", "f3[5,2]", "e3[2,2]"},
    {"f3[5,2]", "e3[2,2]", "1", "1", "f3[5,3]", "e3[3,2]"},
    {"f3[5,3]", "e3[3,2]", "1", "1", "f3[5,4]", "e3[4,2]"},
    {"f3[5,1]", "e3[1,3]", "1", "1", "f3[5,2]", "e3[2,3]"},
    {"f3[5,2]", "e3[2,3]", "1", "1", "f3[5,3]", "e3[3,3]"},
    {"f3[5,3]", "e3[3,3]", "1", "1", "f3[5,4]", "e3[4,3]"},
    {"f3[5,1]", "e3[1,4]", "1", "1", "f3[5,2]", "e3[2,4]"},
    {"f3[5,2]", "e3[2,4]", "1", "1", "f3[5,3]", "e3[3,4]"},
    {"f3[5,3]", "e3[3,4]", "1", "1", "f3[5,4]", "e3[4,4]"},
    {"f3[1,1]", "e3[2,1]", "0", "1", "", ""},
    {"f3[1,1]", "e3[2,2]", "0", "1", "", ""},
    {"f3[1,1]", "e3[2,3]", "0", "1", "", ""},
    {"f3[1,1]", "e3[2,4]", "0", "1", "", ""},
    {"f3[1,1]", "e3[3,1]", "0", "1", "", ""},
    {"f3[1,1]", "e3[3,2]", "0", "1", "", ""},
    {"f3[1,1]", "e3[3,3]", "0", "1", "", ""},
    {"f3[1,1]", "e3[3,4]", "0", "1", "", ""},
    {"f3[1,1]", "e3[4,1]", "0", "1", "", ""},
    {"f3[1,1]", "e3[4,2]", "0", "1", "", ""},
    {"f3[1,1]", "e3[4,3]", "0", "1", "", ""},
    {"f3[1,1]", "e3[4,4]", "0", "1", "", ""},
    {"f3[1,2]", "e3[1,1]", "0", "1", "", ""},
    {"f3[1,2]", "e3[1,2]", "0", "1", "", ""},
    {"f3[1,2]", "e3[1,3]", "0", "1", "", ""},
    {"f3[1,2]", "e3[1,4]", "0", "1", "", ""},
    {"f3[1,2]", "e3[3,1]", "0", "1", "", ""},
    {"f3[1,2]", "e3[3,2]", "0", "1", "", ""},
    {"f3[1,2]", "e3[3,3]", "0", "1", "", ""},
    {"f3[1,2]", "e3[3,4]", "0", "1", "", ""},
    {"f3[1,2]", "e3[4,1]", "0", "1", "", ""},
    {"f3[1,2]", "e3[4,2]", "0", "1", "", ""},
    {"f3[1,2]", "e3[4,3]", "0", "1", "", ""},
    {"f3[1,2]", "e3[4,4]", "0", "1", "", ""},
    {"f3[1,3]", "e3[1,1]", "0", "1", "", ""},
    {"f3[1,3]", "e3[1,2]", "0", "1", "", ""},
    {"f3[1,3]", "e3[1,3]", "0", "1", "", ""},
    {"f3[1,3]", "e3[1,4]", "0", "1", "", ""},
    {"f3[1,3]", "e3[2,1]", "0", "1", "", ""},
    {"f3[1,3]", "e3[2,2]", "0", "1", "", ""},
    {"f3[1,3]", "e3[2,3]", "0", "1", "", ""},
    {"f3[1,3]", "e3[2,4]", "0", "1", "", ""},
    {"f3[1,3]", "e3[4,1]", "0", "1", "", ""},
    {"f3[1,3]", "e3[4,2]", "0", "1", "", ""},
    {"f3[1,3]", "e3[4,3]", "0", "1", "", ""},
    {"f3[1,3]", "e3[4,4]", "0", "1", "", ""},
    {"f3[1,4]", "e3[1,1]", "0", "1", "", ""},
    {"f3[1,4]", "e3[1,2]", "0", "1", "", ""},
    {"f3[1,4]", "e3[1,3]", "0", "1", "", ""},
    {"f3[1,4]", "e3[1,4]", "0", "1", "", ""},
    {"f3[1,4]", "e3[2,1]", "0", "1", "", ""},
    {"f3[1,4]", "e3[2,2]", "0", "1", "", ""},
    {"f3[1,4]", "e3[2,3]", "0", "1", "", ""},
    {"f3[1,4]", "e3[2,4]", "0", "1", "", ""},
    {"f3[1,4]", "e3[3,1]", "0", "1", "", ""},
    {"f3[1,4]", "e3[3,2]", "0", "1", "", ""},
    {"f3[1,4]", "e3[3,3]", "0", "1", "", ""},
    {"f3[1,4]", "e3[3,4]", "0", "1", "", ""},
    {"f3[1,5]", "e3[1,1]", "0", "1", "", ""},
    {"f3[1,5]", "e3[1,2]", "0", "1", "", ""},
    {"f3[1,5]", "e3[1,3]", "0", "1", "", ""},
    {"f3[1,5]", "e3[1,4]", "0", "1", "", ""},
    {"f3[1,5]", "e3[2,1]", "0", "1", "", ""},
    {"f3[1,5]", "e3[2,2]", "0", "1", "", ""},
    {"f3[1,5]", "e3[2,3]", "0", "1", "", ""},
    {"f3[1,5]", "e3[2,4]", "0", "1", "", ""},
    {"f3[1,5]", "e3[3,1]", "0", "1", "", ""},
    {"f3[1,5]", "e3[3,2]", "0", "1", "", ""},
    {"f3[1,5]", "e3[3,3]", "0", "1", "", ""},
    {"f3[1,5]", "e3[3,4]", "0", "1", "", ""},
    {"f3[1,5]", "e3[4,1]", "0", "1", "", ""},
    {"f3[1,5]", "e3[4,2]", "0", "1", "", ""},
    {"f3[1,5]", "e3[4,3]", "0", "1", "", ""},
    {"f3[1,5]", "e3[4,4]", "0", "1", "", ""},
    {"f3[2,1]", "e3[2,1]", "0", "1", "", ""},
    {"f3[2,1]", "e3[2,2]", "0", "1", "", ""},
    {"f3[2,1]", "e3[2,3]", "0", "1", "", ""},
    {"f3[2,1]", "e3[2,4]", "0", "1", "", ""},
    {"f3[2,1]", "e3[3,1]", "0", "1", "", ""},
    {"f3[2,1]", "e3[3,2]", "0", "1", "", ""},
    {"f3[2,1]", "e3[3,3]", "0", "1", "", ""},
    {"f3[2,1]", "e3[3,4]", "0", "1", "", ""},
    {"f3[2,1]", "e3[4,1]", "0", "1", "", ""},
    {"f3[2,1]", "e3[4,2]", "0", "1", "", ""},
    {"f3[2,1]", "e3[4,3]", "0", "1", "", ""},
    {"f3[2,1]", "e3[4,4]", "0", "1", "", ""},
    {"f3[2,2]", "e3[1,1]", "0", "1", "", ""},
    {"f3[2,2]", "e3[1,2]", "0", "1", "", ""},
    {"f3[2,2]", "e3[1,3]", "0", "1", "", ""},
    {"f3[2,2]", "e3[1,4]", "0", "1", "", ""},
    {"f3[2,2]", "e3[3,1]", "0", "1", "", ""},
    {"f3[2,2]", "e3[3,2]", "0", "1", "", ""},
    {"f3[2,2]", "e3[3,3]", "0", "1", "", ""},
    {"f3[2,2]", "e3[3,4]", "0", "1", "", ""},
    {"f3[2,2]", "e3[4,1]", "0", "1", "", ""},
    {"f3[2,2]", "e3[4,2]", "0", "1", "", ""},
    {"f3[2,2]", "e3[4,3]", "0", "1", "", ""},
    {"f3[2,2]", "e3[4,4]", "0", "1", "", ""},
    {"f3[2,3]", "e3[1,1]", "0", "1", "", ""},
    {"f3[2,3]", "e3[1,2]", "0", "1", "", ""},
    {"f3[2,3]", "e3[1,3]", "0", "1", "", ""},
    {"f3[2,3]", "e3[1,4]", "0", "1", "", ""},
    {"f3[2,3]", "e3[2,1]", "0", "1", "", ""},
    {"f3[2,3]", "e3[2,2]", "0", "1", "", ""},
    {"f3[2,3]", "e3[2,3]", "0", "1", "", ""},
    {"f3[2,3]", "e3[2,4]", "0", "1", "", ""},
    {"f3[2,3]", "e3[4,1]", "0", "1", "", ""},
    {"f3[2,3]", "e3[4,2]", "0", "1", "", ""},
    {"f3[2,3]", "e3[4,3]", "0", "1", "", ""},
    {"f3[2,3]", "e3[4,4]", "0", "1", "", ""},
    {"f3[2,4]", "e3[1,1]", "0", "1", "", ""},
    {"f3[2,4]", "e3[1,2]", "0", "1", "", ""},
    {"f3[2,4]", "e3[1,3]", "0", "1", "", ""},
    {"f3[2,4]", "e3[1,4]", "0", "1", "", ""},
    {"f3[2,4]", "e3[2,1]", "0", "1", "", ""},
    {"f3[2,4]", "e3[2,2]", "0", "1", "", ""},
    {"f3[2,4]", "e3[2,3]", "0", "1", "", ""},
    {"f3[2,4]", "e3[2,4]", "0", "1", "", ""},
    {"f3[2,4]", "e3[3,1]", "0", "1", "", ""},
    {"f3[2,4]", "e3[3,2]", "0", "1", "", ""},
    {"f3[2,4]", "e3[3,3]", "0", "1", "", ""},
    {"f3[2,4]", "e3[3,4]", "0", "1", "", ""},
    {"f3[2,5]", "e3[1,1]", "0", "1", "", ""},
    {"f3[2,5]", "e3[1,2]", "0", "1", "", ""},
    {"f3[2,5]", "e3[1,3]", "0", "1", "", ""},
    {"f3[2,5]", "e3[1,4]", "0", "1", "", ""},
    {"f3[2,5]", "e3[2,1]", "0", "1", "", ""},
    {"f3[2,5]", "e3[2,2]", "0", "1", "", ""},
    {"f3[2,5]", "e3[2,3]", "0", "1", "", ""},
    {"f3[2,5]", "e3[2,4]", "0", "1", "", ""},
    {"f3[2,5]", "e3[3,1]", "0", "1", "", ""},
    {"f3[2,5]", "e3[3,2]", "0", "1", "", ""},
    {"f3[2,5]", "e3[3,3]", "0", "1", "", ""},
    {"f3[2,5]", "e3[3,4]", "0", "1", "", ""},
    {"f3[2,5]", "e3[4,1]", "0", "1", "", ""},
    {"f3[2,5]", "e3[4,2]", "0", "1", "", ""},
    {"f3[2,5]", "e3[4,3]", "0", "1", "", ""},
    {"f3[2,5]", "e3[4,4]", "0", "1", "", ""},
    {"f3[3,1]", "e3[2,1]", "0", "1", "", ""},
    {"f3[3,1]", "e3[2,2]", "0", "1", "", ""},
    {"f3[3,1]", "e3[2,3]", "0", "1", "", ""},
    {"f3[3,1]", "e3[2,4]", "0", "1", "", ""},
    {"f3[3,1]", "e3[3,1]", "0", "1", "", ""},
    {"f3[3,1]", "e3[3,2]", "0", "1", "", ""},
    {"f3[3,1]", "e3[3,3]", "0", "1", "", ""},
    {"f3[3,1]", "e3[3,4]", "0", "1", "", ""},
    {"f3[3,1]", "e3[4,1]", "0", "1", "", ""},
    {"f3[3,1]", "e3[4,2]", "0", "1", "", ""},
    {"f3[3,1]", "e3[4,3]", "0", "1", "", ""},
    {"f3[3,1]", "e3[4,4]", "0", "1", "", ""},
    {"f3[3,2]", "e3[1,1]", "0", "1", "", ""},
    {"f3[3,2]", "e3[1,2]", "0", "1", "", ""},
    {"f3[3,2]", "e3[1,3]", "0", "1", "", ""},
    {"f3[3,2]", "e3[1,4]", "0", "1", "", ""},
    {"f3[3,2]", "e3[3,1]", "0", "1", "", ""},
    {"f3[3,2]", "e3[3,2]", "0", "1", "", ""},
    {"f3[3,2]", "e3[3,3]", "0", "1", "", ""},
    {"f3[3,2]", "e3[3,4]", "0", "1", "", ""},
    {"f3[3,2]", "e3[4,1]", "0", "1", "", ""},
    {"f3[3,2]", "e3[4,2]", "0", "1", "", ""},
    {"f3[3,2]", "e3[4,3]", "0", "1", "", ""},
    {"f3[3,2]", "e3[4,4]", "0", "1", "", ""},
    {"f3[3,3]", "e3[1,1]", "0", "1", "", ""},
    {"f3[3,3]", "e3[1,2]", "0", "1", "", ""},
    {"f3[3,3]", "e3[1,3]", "0", "1", "", ""},
    {"f3[3,3]", "e3[1,4]", "0", "1", "", ""},
    {"f3[3,3]", "e3[2,1]", "0", "1", "", ""},
    {"f3[3,3]", "e3[2,2]", "0", "1", "", ""},
    {"f3[3,3]", "e3[2,3]", "0", "1", "", ""},
    {"f3[3,3]", "e3[2,4]", "0", "1", "", ""},
    {"f3[3,3]", "e3[4,1]", "0", "1", "", ""},
    {"f3[3,3]", "e3[4,2]", "0", "1", "", ""},
    {"f3[3,3]", "e3[4,3]", "0", "1", "", ""},
    {"f3[3,3]", "e3[4,4]", "0", "1", "", ""},
    {"f3[3,4]", "e3[1,1]", "0", "1", "", ""},
    {"f3[3,4]", "e3[1,2]", "0", "1", "", ""},
    {"f3[3,4]", "e3[1,3]", "0", "1", "", ""},
    {"f3[3,4]", "e3[1,4]", "0", "1", "", ""},
    {"f3[3,4]", "e3[2,1]", "0", "1", "", ""},
    {"f3[3,4]", "e3[2,2]", "0", "1", "", ""},
    {"f3[3,4]", "e3[2,3]", "0", "1", "", ""},
    {"f3[3,4]", "e3[2,4]", "0", "1", "", ""},
    {"f3[3,4]", "e3[3,1]", "0", "1", "", ""},
    {"f3[3,4]", "e3[3,2]", "0", "1", "", ""},
    {"f3[3,4]", "e3[3,3]", "0", "1", "", ""},
    {"f3[3,4]", "e3[3,4]", "0", "1", "", ""},
    {"f3[3,5]", "e3[1,1]", "0", "1", "", ""},
    {"f3[3,5]", "e3[1,2]", "0", "1", "", ""},
    {"f3[3,5]", "e3[1,3]", "0", "1", "", ""},
    {"f3[3,5]", "e3[1,4]", "0", "1", "", ""},
    {"f3[3,5]", "e3[2,1]", "0", "1", "", ""},
    {"f3[3,5]", "e3[2,2]", "0", "1", "", ""},
    {"f3[3,5]", "e3[2,3]", "0", "1", "", ""},
    {"f3[3,5]", "e3[2,4]", "0", "1", "", ""},
    {"f3[3,5]", "e3[3,1]", "0", "1", "", ""},
    {"f3[3,5]", "e3[3,2]", "0", "1", "", ""},
    {"f3[3,5]", "e3[3,3]", "0", "1", "", ""},
    {"f3[3,5]", "e3[3,4]", "0", "1", "", ""},
    {"f3[3,5]", "e3[4,1]", "0", "1", "", ""},
    {"f3[3,5]", "e3[4,2]", "0", "1", "", ""},
    {"f3[3,5]", "e3[4,3]", "0", "1", "", ""},
    {"f3[3,5]", "e3[4,4]", "0", "1", "", ""},
    {"f3[4,1]", "e3[2,1]", "0", "1", "", ""},
    {"f3[4,1]", "e3[2,2]", "0", "1", "", ""},
    {"f3[4,1]", "e3[2,3]", "0", "1", "", ""},
    {"f3[4,1]", "e3[2,4]", "0", "1", "", ""},
    {"f3[4,1]", "e3[3,1]", "0", "1", "", ""},
    {"f3[4,1]", "e3[3,2]", "0", "1", "", ""},
    {"f3[4,1]", "e3[3,3]", "0", "1", "", ""},
    {"f3[4,1]", "e3[3,4]", "0", "1", "", ""},
    {"f3[4,1]", "e3[4,1]", "0", "1", "", ""},
    {"f3[4,1]", "e3[4,2]", "0", "1", "", ""},
    {"f3[4,1]", "e3[4,3]", "0", "1", "", ""},
    {"f3[4,1]", "e3[4,4]", "0", "1", "", ""},
    {"f3[4,2]", "e3[1,1]", "0", "1", "", ""},
    {"f3[4,2]", "e3[1,2]", "0", "1", "", ""},
    {"f3[4,2]", "e3[1,3]", "0", "1", "", ""},
    {"f3[4,2]", "e3[1,4]", "0", "1", "", ""},
    {"f3[4,2]", "e3[3,1]", "0", "1", "", ""},
    {"f3[4,2]", "e3[3,2]", "0", "1", "", ""},
    {"f3[4,2]", "e3[3,3]", "0", "1", "", ""},
    {"f3[4,2]", "e3[3,4]", "0", "1", "", ""},
    {"f3[4,2]", "e3[4,1]", "0", "1", "", ""},
    {"f3[4,2]", "e3[4,2]", "0", "1", "", ""},
    {"f3[4,2]", "e3[4,3]", "0", "1", "", ""},
    {"f3[4,2]", "e3[4,4]", "0", "1", "", ""},
    {"f3[4,3]", "e3[1,1]", "0", "1", "", ""},
    {"f3[4,3]", "e3[1,2]", "0", "1", "", ""},
    {"f3[4,3]", "e3[1,3]", "0", "1", "", ""},
    {"f3[4,3]", "e3[1,4]", "0", "1", "", ""},
    {"f3[4,3]", "e3[2,1]", "0", "1", "", ""},
    {"f3[4,3]", "e3[2,2]", "0", "1", "", ""},
    {"f3[4,3]", "e3[2,3]", "0", "1", "", ""},
    {"f3[4,3]", "e3[2,4]", "0", "1", "", ""},
    {"f3[4,3]", "e3[4,1]", "0", "1", "", ""},
    {"f3[4,3]", "e3[4,2]", "0", "1", "", ""},
    {"f3[4,3]", "e3[4,3]", "0", "1", "", ""},
    {"f3[4,3]", "e3[4,4]", "0", "1", "", ""},
    {"f3[4,4]", "e3[1,1]", "0", "1", "", ""},
    {"f3[4,4]", "e3[1,2]", "0", "1", "", ""},
    {"f3[4,4]", "e3[1,3]", "0", "1", "", ""},
    {"f3[4,4]", "e3[1,4]", "0", "1", "", ""},
    {"f3[4,4]", "e3[2,1]", "0", "1", "", ""},
    {"f3[4,4]", "e3[2,2]", "0", "1", "", ""},
    {"f3[4,4]", "e3[2,3]", "0", "1", "", ""},
    {"f3[4,4]", "e3[2,4]", "0", "1", "", ""},
    {"f3[4,4]", "e3[3,1]", "0", "1", "", ""},
    {"f3[4,4]", "e3[3,2]", "0", "1", "", ""},
    {"f3[4,4]", "e3[3,3]", "0", "1", "", ""},
    {"f3[4,4]", "e3[3,4]", "0", "1", "", ""},
    {"f3[4,5]", "e3[1,1]", "0", "1", "", ""},
    {"f3[4,5]", "e3[1,2]", "0", "1", "", ""},
    {"f3[4,5]", "e3[1,3]", "0", "1", "", ""},
    {"f3[4,5]", "e3[1,4]", "0", "1", "", ""},
    {"f3[4,5]", "e3[2,1]", "0", "1", "", ""},
    {"f3[4,5]", "e3[2,2]", "0", "1", "", ""},
    {"f3[4,5]", "e3[2,3]", "0", "1", "", ""},
    {"f3[4,5]", "e3[2,4]", "0", "1", "", ""},
    {"f3[4,5]", "e3[3,1]", "0", "1", "", ""},
    {"f3[4,5]", "e3[3,2]", "0", "1", "", ""},
    {"f3[4,5]", "e3[3,3]", "0", "1", "", ""},
    {"f3[4,5]", "e3[3,4]", "0", "1", "", ""},
    {"f3[4,5]", "e3[4,1]", "0", "1", "", ""},
    {"f3[4,5]", "e3[4,2]", "0", "1", "", ""},
    {"f3[4,5]", "e3[4,3]", "0", "1", "", ""},
    {"f3[4,5]", "e3[4,4]", "0", "1", "", ""},
    {"f3[5,1]", "e3[2,1]", "0", "1", "", ""},
    {"f3[5,1]", "e3[2,2]", "0", "1", "", ""},
    {"f3[5,1]", "e3[2,3]", "0", "1", "", ""},
    {"f3[5,1]", "e3[2,4]", "0", "1", "", ""},
    {"f3[5,1]", "e3[3,1]", "0", "1", "", ""},
    {"f3[5,1]", "e3[3,2]", "0", "1", "", ""},
    {"f3[5,1]", "e3[3,3]", "0", "1", "", ""},
    {"f3[5,1]", "e3[3,4]", "0", "1", "", ""},
    {"f3[5,1]", "e3[4,1]", "0", "1", "", ""},
    {"f3[5,1]", "e3[4,2]", "0", "1", "", ""},
    {"f3[5,1]", "e3[4,3]", "0", "1", "", ""},
    {"f3[5,1]", "e3[4,4]", "0", "1", "", ""},
    {"f3[5,2]", "e3[1,1]", "0", "1", "", ""},
    {"f3[5,2]", "e3[1,2]", "0", "1", "", ""},
    {"f3[5,2]", "e3[1,3]", "0", "1", "", ""},
    {"f3[5,2]", "e3[1,4]", "0", "1", "", ""},
    {"f3[5,2]", "e3[3,1]", "0", "1", "", ""},
    {"f3[5,2]", "e3[3,2]", "0", "1", "", ""},
    {"f3[5,2]", "e3[3,3]", "0", "1", "", ""},
    {"f3[5,2]", "e3[3,4]", "0", "1", "", ""},
    {"f3[5,2]", "e3[4,1]", "0", "1", "", ""},
    {"f3[5,2]", "e3[4,2]", "0", "1", "", ""},
    {"f3[5,2]", "e3[4,3]", "0", "1", "", ""},
    {"f3[5,2]", "e3[4,4]", "0", "1", "", ""},
    {"f3[5,3]", "e3[1,1]", "0", "1", "", ""},
    {"f3[5,3]", "e3[1,2]", "0", "1", "", ""},
    {"f3[5,3]", "e3[1,3]", "0", "1", "", ""},
    {"f3[5,3]", "e3[1,4]", "0", "1", "", ""},
    {"f3[5,3]", "e3[2,1]", "0", "1", "", ""},
    {"f3[5,3]", "e3[2,2]", "0", "1", "", ""},
    {"f3[5,3]", "e3[2,3]", "0", "1", "", ""},
    {"f3[5,3]", "e3[2,4]", "0", "1", "", ""},
    {"f3[5,3]", "e3[4,1]", "0", "1", "", ""},
    {"f3[5,3]", "e3[4,2]", "0", "1", "", ""},
    {"f3[5,3]", "e3[4,3]", "0", "1", "", ""},
    {"f3[5,3]", "e3[4,4]", "0", "1", "", ""},
    {"f3[5,4]", "e3[1,1]", "0", "1", "", ""},
    {"f3[5,4]", "e3[1,2]", "0", "1", "", ""},
    {"f3[5,4]", "e3[1,3]", "0", "1", "", ""},
    {"f3[5,4]", "e3[1,4]", "0", "1", "", ""},
    {"f3[5,4]", "e3[2,1]", "0", "1", "", ""},
    {"f3[5,4]", "e3[2,2]", "0", "1", "", ""},
    {"f3[5,4]", "e3[2,3]", "0", "1", "", ""},
    {"f3[5,4]", "e3[2,4]", "0", "1", "", ""},
    {"f3[5,4]", "e3[3,1]", "0", "1", "", ""},
    {"f3[5,4]", "e3[3,2]", "0", "1", "", ""},
    {"f3[5,4]", "e3[3,3]", "0", "1", "", ""},
    {"f3[5,4]", "e3[3,4]", "0", "1", "", ""},
    {"f3[5,5]", "e3[1,1]", "0", "1", "", ""},
    {"f3[5,5]", "e3[1,2]", "0", "1", "", ""},
    {"f3[5,5]", "e3[1,3]", "0", "1", "", ""},
    {"f3[5,5]", "e3[1,4]", "0", "1", "", ""},
    {"f3[5,5]", "e3[2,1]", "0", "1", "", ""},
    {"f3[5,5]", "e3[2,2]", "0", "1", "", ""},
    {"f3[5,5]", "e3[2,3]", "0", "1", "", ""},
    {"f3[5,5]", "e3[2,4]", "0", "1", "", ""},
    {"f3[5,5]", "e3[3,1]", "0", "1", "", ""},
    {"f3[5,5]", "e3[3,2]", "0", "1", "", ""},
    {"f3[5,5]", "e3[3,3]", "0", "1", "", ""},
    {"f3[5,5]", "e3[3,4]", "0", "1", "", ""},
    {"f3[5,5]", "e3[4,1]", "0", "1", "", ""},
    {"f3[5,5]", "e3[4,2]", "0", "1", "", ""},
    {"f3[5,5]", "e3[4,3]", "0", "1", "", ""},
    {"f3[5,5]", "e3[4,4]", "0", "1", "", ""},
    {"f3[1,1]", "e2[1,1]", "1", "1", "f3[1,2]", "e2[2,1]"},
    {"f3[1,2]", "e2[2,1]", "1", "1", "f3[1,3]", "e2[3,1]"},
    {"f3[1,3]", "e2[3,1]", "1", "1", "f3[1,4]", "e2[4,1]"},
    {"f3[1,4]", "e2[4,1]", "1", "1", "f3[1,5]", "e2[5,1]"},
    {"f3[1,1]", "e2[1,2]", "1", "1", "f3[1,2]", "e2[2,2]"},
    {"f3[1,2]", "e2[2,2]", "1", "1", "f3[1,3]", "e2[3,2]"},
    {"f3[1,3]", "e2[3,2]", "1", "1", "f3[1,4]", "e2[4,2]"},
    {"f3[1,4]", "e2[4,2]", "1", "1", "f3[1,5]", "e2[5,2]"},
    {"f3[1,1]", "e2[1,3]", "1", "1", "f3[1,2]", "e2[2,3]"},
    {"f3[1,2]", "e2[2,3]", "1", "1", "f3[1,3]", "e2[3,3]"},
    {"f3[1,3]", "e2[3,3]", "1", "1", "f3[1,4]", "e2[4,3]"},
    {"f3[1,4]", "e2[4,3]", "1", "1", "f3[1,5]", "e2[5,3]"},
    {"f3[1,1]", "e2[1,4]", "1", "1", "f3[1,2]", "e2[2,4]"},
    {"f3[1,2]", "e2[2,4]", "1", "1", "f3[1,3]", "e2[3,4]"},
    {"f3[1,3]", "e2[3,4]", "1", "1", "f3[1,4]", "e2[4,4]"},
    {"f3[1,4]", "e2[4,4]", "1", "1", "f3[1,5]", "e2[5,4]"},
    {"f3[1,1]", "e2[1,5]", "1", "1", "f3[1,2]", "e2[2,5]"},
    {"f3[1,2]", "e2[2,5]", "1", "1", "f3[1,3]", "e2[3,5]"},
    {"f3[1,3]", "e2[3,5]", "1", "1", "f3[1,4]", "e2[4,5]"},
    {"f3[1,4]", "e2[4,5]", "1", "1", "f3[1,5]", "e2[5,5]"},
    {"f3[1,1]", "e2[1,6]", "1", "1", "f3[1,2]", "e2[2,6]"},
    {"f3[1,2]", "e2[2,6]", "1", "1", "f3[1,3]", "e2[3,6]"},
    {"f3[1,3]", "e2[3,6]", "1", "1", "f3[1,4]", "e2[4,6]"},
    {"f3[1,4]", "e2[4,6]", "1", "1", "f3[1,5]", "e2[5,6]"},
    {"f3[2,1]", "e2[1,1]", "1", "1", "f3[2,2]", "e2[2,1]"},
    {"f3[2,2]", "e2[2,1]", "1", "1", "f3[2,3]", "e2[3,1]"},
    {"f3[2,3]", "e2[3,1]", "1", "1", "f3[2,4]", "e2[4,1]"},
    {"f3[2,4]", "e2[4,1]", "1", "1", "f3[2,5]", "e2[5,1]"},
    {"f3[2,1]", "e2[1,2]", "1", "1", "f3[2,2]", "e2[2,2]"},
    {"f3[2,2]", "e2[2,2]", "1", "1", "f3[2,3]", "e2[3,2]"},
    {"f3[2,3]", "e2[3,2]", "1", "1", "f3[2,4]", "e2[4,2]"},
    {"f3[2,4]", "e2[4,2]", "1", "1", "f3[2,5]", "e2[5,2]"},
    {"f3[2,1]", "e2[1,3]", "1", "1", "f3[2,2]", "e2[2,3]"},
    {"f3[2,2]", "e2[2,3]", "1", "1", "f3[2,3]", "e2[3,3]"},
    {"f3[2,3]", "e2[3,3]", "1", "1", "f3[2,4]", "e2[4,3]"},
    {"f3[2,4]", "e2[4,3]", "1", "1", "f3[2,5]", "e2[5,3]"},
    {"f3[2,1]", "e2[1,4]", "1", "1", "f3[2,2]", "e2[2,4]"},
    {"f3[2,2]", "e2[2,4]", "1", "1", "f3[2,3]", "e2[3,4]"},
    {"f3[2,3]", "e2[3,4]", "1", "1", "f3[2,4]", "e2[4,4]"},
    {"f3[2,4]", "e2[4,4]", "1", "1", "f3[2,5]", "e2[5,4]"},
    {"f3[2,1]", "e2[1,5]", "1", "1", "f3[2,2]", "e2[2,5]"},
    {"f3[2,2]", "e2[2,5]", "1", "1", "f3[2,3]", "e2[3,5]"},
    {"f3[2,3]", "e2[3,5]", "1", "1", "f3[2,4]", "e2[4,5]"},
    {"f3[2,4]", "e2[4,5]", "1", "1", "f3[2,5]", "e2[5,5]"},
    {"f3[2,1]", "e2[1,6]", "1", "1", "f3[2,2]", "e2[2,6]"},
    {"f3[2,2]", "e2[2,6]", "1", "1", "f3[2,3]", "e2[3,6]"},
    {"f3[2,3]", "e2[3,6]", "1", "1", "f3[2,4]", "e2[4,6]"},
    {"f3[2,4]", "e2[4,6]", "1", "1", "f3[2,5]", "e2[5,6]"},
    {"f3[3,1]", "e2[1,1]", "1", "1", "f3[3,2]", "e2[2,1]"},
    {"f3[3,2]", "e2[2,1]", "1", "1", "f3[3,3]", "e2[3,1]"},
    {"f3[3,3]", "e2[3,1]", "1", "1", "f3[3,4]", "e2[4,1]"},
    {"f3[3,4]", "e2[4,1]", "1", "1", "f3[3,5]", "e2[5,1]"},
    {"f3[3,1]", "e2[1,2]", "1", "1", "f3[3,2]", "e2[2,2]"},
    {"f3[3,2]", "e2[2,2]", "1", "1", "f3[3,3]", "e2[3,2]"},
    {"f3[3,3]", "e2[3,2]", "1", "1", "f3[3,4]", "e2[4,2]"},
    {"f3[3,4]", "e2[4,2]", "1", "1", "f3[3,5]", "e2[5,2]"},
    {"f3[3,1]", "e2[1,3]", "1", "1", "f3[3,2]", "e2[2,3]"},
    {"f3[3,2]", "e2[2,3]", "1", "1", "f3[3,3]", "e2[3,3]"},
    {"f3[3,3]", "e2[3,3]", "1", "1", "f3[3,4]", "e2[4,3]"},
    {"f3[3,4]", "e2[4,3]", "1", "1", "f3[3,5]", "e2[5,3]"},
    {"f3[3,1]", "e2[1,4]", "1", "1", "f3[3,2]", "e2[2,4]"},
    {"f3[3,2]", "e2[2,4]", "1", "1", "f3[3,3]", "e2[3,4]"},
    {"f3[3,3]", "e2[3,4]", "1", "1", "f3[3,4]", "e2[4,4]"},
    {"f3[3,4]", "e2[4,4]", "1", "1", "f3[3,5]", "e2[5,4]"},
    {"f3[3,1]", "e2[1,5]", "1", "1", "f3[3,2]", "e2[2,5]"},
    {"f3[3,2]", "e2[2,5]", "1", "1", "f3[3,3]", "e2[3,5]"},
    {"f3[3,3]", "e2[3,5]", "1", "1", "f3[3,4]", "e2[4,5]"},
    {"f3[3,4]", "e2[4,5]", "1", "1", "f3[3,5]", "e2[5,5]"},
    {"f3[3,1]", "e2[1,6]", "1", "1", "f3[3,2]", "e2[2,6]"},
    {"f3[3,2]", "e2[2,6]", "1", "1", "f3[3,3]", "e2[3,6]"},
    {"f3[3,3]", "e2[3,6]", "1", "1", "f3[3,4]", "e2[4,6]"},
    {"f3[3,4]", "e2[4,6]", "1", "1", "f3[3,5]", "e2[5,6]"},
    {"f3[4,1]", "e2[1,1]", "1", "1", "f3[4,2]", "e2[2,1]"},
    {"f3[4,2]", "e2[2,1]", "1", "1", "f3[4,3]", "e2[3,1]"},
    {"f3[4,3]", "e2[3,1]", "1", "1", "f3[4,4]", "e2[4,1]"},
    {"f3[4,4]", "e2[4,1]", "1", "1", "f3[4,5]", "e2[5,1]"},
    {"f3[4,1]", "e2[1,2]", "1", "1", "f3[4,2]", "e2[2,2]"},
    {"f3[4,2]", "e2[2,2]", "1", "1", "f3[4,3]", "e2[3,2]"},
    {"f3[4,3]", "e2[3,2]", "1", "1", "f3[4,4]", "e2[4,2]"},
    {"f3[4,4]", "e2[4,2]", "1", "1", "f3[4,5]", "e2[5,2]"},
    {"f3[4,1]", "e2[1,3]", "1", "1", "f3[4,2]", "e2[2,3]"},
    {"f3[4,2]", "e2[2,3]", "1", "1", "f3[4,3]", "e2[3,3]"},
    {"f3[4,3]", "e2[3,3]", "1", "1", "f3[4,4]", "e2[4,3]"},
    {"f3[4,4]", "e2[4,3]", "1", "1", "f3[4,5]", "e2[5,3]"},
    {"f3[4,1]", "e2[1,4]", "1", "1", "f3[4,2]", "e2[2,4]"},
    {"f3[4,2]", "e2[2,4]", "1", "1", "f3[4,3]", "e2[3,4]"},
    {"f3[4,3]", "e2[3,4]", "1", "1", "f3[4,4]", "e2[4,4]"},
    {"f3[4,4]", "e2[4,4]", "1", "1", "f3[4,5]", "e2[5,4]"},
    {"f3[4,1]", "e2[1,5]", "1", "1", "f3[4,2]", "e2[2,5]"},
    {"f3[4,2]", "e2[2,5]", "1", "1", "f3[4,3]", "e2[3,5]"},
    {"f3[4,3]", "e2[3,5]", "1", "1", "f3[4,4]", "e2[4,5]"},
    {"f3[4,4]", "e2[4,5]", "1", "1", "f3[4,5]", "e2[5,5]"},
    {"f3[4,1]", "e2[1,6]", "1", "1", "f3[4,2]", "e2[2,6]"},
    {"f3[4,2]", "e2[2,6]", "1", "1", "f3[4,3]", "e2[3,6]"},
    {"f3[4,3]", "e2[3,6]", "1", "1", "f3[4,4]", "e2[4,6]"},
    {"f3[4,4]", "e2[4,6]", "1", "1", "f3[4,5]", "e2[5,6]"},
    {"f3[5,1]", "e2[1,1]", "1", "1", "f3[5,2]", "e2[2,1]"},
    {"f3[5,2]", "e2[2,1]", "1", "1", "f3[5,3]", "e2[3,1]"},
    {"f3[5,3]", "e2[3,1]", "1", "1", "f3[5,4]", "e2[4,1]"},
    {"f3[5,4]", "e2[4,1]", "1", "1", "f3[5,5]", "e2[5,1]"},
    {"f3[5,1]", "e2[1,2]", "1", "1", "f3[5,2]", "e2[2,2]"},
    {"f3[5,2]", "e2[2,2]", "1", "1", "f3[5,3]", "e2[3,2]"},
    {"f3[5,3]", "e2[3,2]", "1", "1", "f3[5,4]", "e2[4,2]"},
    {"f3[5,4]", "e2[4,2]", "1", "1", "f3[5,5]", "e2[5,2]"},
    {"f3[5,1]", "e2[1,3]", "1", "1", "f3[5,2]", "e2[2,3]"},
    {"f3[5,2]", "e2[2,3]", "1", "1", "f3[5,3]", "e2[3,3]"},
    {"f3[5,3]", "e2[3,3]", "1", "1", "f3[5,4]", "e2[4,3]"},
    {"f3[5,4]", "e2[4,3]", "1", "1", "f3[5,5]", "e2[5,3]"},
    {"f3[5,1]", "e2[1,4]", "1", "1", "f3[5,2]", "e2[2,4]"},
    {"f3[5,2]", "e2[2,4]", "1", "1", "f3[5,3]", "e2[3,4]"},
    {"f3[5,3]", "e2[3,4]", "1", "1", "f3[5,4]", "e2[4,4]"},
    {"f3[5,4]", "e2[4,4]", "1", "1", "f3[5,5]", "e2[5,4]"},
    {"f3[5,1]", "e2[1,5]", "1", "1", "f3[5,2]", "e2[2,5]"},
    {"f3[5,2]", "e2[2,5]", "1", "1", "f3[5,3]", "e2[3,5]"},
    {"f3[5,3]", "e2[3,5]", "1", "1", "f3[5,4]", "e2[4,5]"},
    {"f3[5,4]", "e2[4,5]", "1", "1", "f3[5,5]", "e2[5,5]"},
    {"f3[5,1]", "e2[1,6]", "1", "1", "f3[5,2]", "e2[2,6]"},
    {"f3[5,2]", "e2[2,6]", "1", "1", "f3[5,3]", "e2[3,6]"},
    {"f3[5,3]", "e2[3,6]", "1", "1", "f3[5,4]", "e2[4,6]"},
    {"f3[5,4]", "e2[4,6]", "1", "1", "f3[5,5]", "e2[5,6]"},
    {"f3[1,1]", "e2[2,1]", "0", "1", "", ""},
    {"f3[1,1]", "e2[2,2]", "0", "1", "", ""},
    {"f3[1,1]", "e2[2,3]", "0", "1", "", ""},
    {"f3[1,1]", "e2[2,4]", "0", "1", "", ""},
    {"f3[1,1]", "e2[2,5]", "0", "1", "", ""},
    {"f3[1,1]", "e2[2,6]", "0", "1", "", ""},
    {"f3[1,1]", "e2[3,1]", "0", "1", "", ""},
    {"f3[1,1]", "e2[3,2]", "0", "1", "", ""},
    {"f3[1,1]", "e2[3,3]", "0", "1", "", ""},
    {"f3[1,1]", "e2[3,4]", "0", "1", "", ""},
    {"f3[1,1]", "e2[3,5]", "0", "1", "", ""},
    {"f3[1,1]", "e2[3,6]", "0", "1", "", ""},
    {"f3[1,1]", "e2[4,1]", "0", "1", "", ""},
    {"f3[1,1]", "e2[4,2]", "0", "1", "", ""},
    {"f3[1,1]", "e2[4,3]", "0", "1", "", ""},
    {"f3[1,1]", "e2[4,4]", "0", "1", "", ""},
    {"f3[1,1]", "e2[4,5]", "0", "1", "", ""},
    {"f3[1,1]", "e2[4,6]", "0", "1", "", ""},
    {"f3[1,1]", "e2[5,1]", "0", "1", "", ""},
    {"f3[1,1]", "e2[5,2]", "0", "1", "", ""},
    {"f3[1,1]", "e2[5,3]", "0", "1", "", ""},
    {"f3[1,1]", "e2[5,4]", "0", "1", "", ""},
    {"f3[1,1]", "e2[5,5]", "0", "1", "", ""},
    {"f3[1,1]", "e2[5,6]", "0", "1", "", ""},
    {"f3[1,1]", "e2[6,1]", "0", "1", "", ""},
    {"f3[1,1]", "e2[6,2]", "0", "1", "", ""},
    {"f3[1,1]", "e2[6,3]", "0", "1", "", ""},
    {"f3[1,1]", "e2[6,4]", "0", "1", "", ""},
    {"f3[1,1]", "e2[6,5]", "0", "1", "", ""},
    {"f3[1,1]", "e2[6,6]", "0", "1", "", ""},
    {"f3[1,2]", "e2[1,1]", "0", "1", "", ""},
    {"f3[1,2]", "e2[1,2]", "0", "1", "", ""},
    {"f3[1,2]", "e2[1,3]", "0", "1", "", ""},
    {"f3[1,2]", "e2[1,4]", "0", "1", "", ""},
    {"f3[1,2]", "e2[1,5]", "0", "1", "", ""},
    {"f3[1,2]", "e2[1,6]", "0", "1", "", ""},
    {"f3[1,2]", "e2[3,1]", "0", "1", "", ""},
    {"f3[1,2]", "e2[3,2]", "0", "1", "", ""},
    {"f3[1,2]", "e2[3,3]", "0", "1", "", ""},
    {"f3[1,2]", "e2[3,4]", "0", "1", "", ""},
    {"f3[1,2]", "e2[3,5]", "0", "1", "", ""},
    {"f3[1,2]", "e2[3,6]", "0", "1", "", ""},
    {"f3[1,2]", "e2[4,1]", "0", "1", "", ""},
    {"f3[1,2]", "e2[4,2]", "0", "1", "", ""},
    {"f3[1,2]", "e2[4,3]", "0", "1", "", ""},
    {"f3[1,2]", "e2[4,4]", "0", "1", "", ""},
    {"f3[1,2]", "e2[4,5]", "0", "1", "", ""},
    {"f3[1,2]", "e2[4,6]", "0", "1", "", ""},
    {"f3[1,2]", "e2[5,1]", "0", "1", "", ""},
    {"f3[1,2]", "e2[5,2]", "0", "1", "", ""},
    {"f3[1,2]", "e2[5,3]", "0", "1", "", ""},
    {"f3[1,2]", "e2[5,4]", "0", "1", "", ""},
    {"f3[1,2]", "e2[5,5]", "0", "1", "", ""},
    {"f3[1,2]", "e2[5,6]", "0", "1", "", ""},
    {"f3[1,2]", "e2[6,1]", "0", "1", "", ""},
    {"f3[1,2]", "e2[6,2]", "0", "1", "", ""},
    {"f3[1,2]", "e2[6,3]", "0", "1", "", ""},
    {"f3[1,2]", "e2[6,4]", "0", "1", "", ""},
    {"f3[1,2]", "e2[6,5]", "0", "1", "", ""},
    {"f3[1,2]", "e2[6,6]", "0", "1", "", ""},
    {"f3[1,3]", "e2[1,1]", "0", "1", "", ""},
    {"f3[1,3]", "e2[1,2]", "0", "1", "", ""},
    {"f3[1,3]", "e2[1,3]", "0", "1", "", ""},
    {"f3[1,3]", "e2[1,4]", "0", "1", "", ""},
    {"f3[1,3]", "e2[1,5]", "0", "1", "", ""},
    {"f3[1,3]", "e2[1,6]", "0", "1", "", ""},
    {"f3[1,3]", "e2[2,1]", "0", "1", "", ""},
    {"f3[1,3]", "e2[2,2]", "0", "1", "", ""},
    {"f3[1,3]", "e2[2,3]", "0", "1", "", ""},
    {"f3[1,3]", "e2[2,4]", "0", "1", "", ""},
    {"f3[1,3]", "e2[2,5]", "0", "1", "", ""},
    {"f3[1,3]", "e2[2,6]", "0", "1", "", ""},
    {"f3[1,3]", "e2[4,1]", "0", "1", "", ""},
    {"f3[1,3]", "e2[4,2]", "0", "1", "", ""},
    {"f3[1,3]", "e2[4,3]", "0", "1", "", ""},
    {"f3[1,3]", "e2[4,4]", "0", "1", "", ""},
    {"f3[1,3]", "e2[4,5]", "0", "1", "", ""},
    {"f3[1,3]", "e2[4,6]", "0", "1", "", ""},
    {"f3[1,3]", "e2[5,1]", "0", "1", "", ""},
    {"f3[1,3]", "e2[5,2]", "0", "1", "", ""},
    {"f3[1,3]", "e2[5,3]", "0", "1", "", ""},
    {"f3[1,3]", "e2[5,4]", "0", "1", "", ""},
    {"f3[1,3]", "e2[5,5]", "0", "1", "", ""},
    {"f3[1,3]", "e2[5,6]", "0", "1", "", ""},
    {"f3[1,3]", "e2[6,1]", "0", "1", "", ""},
    {"f3[1,3]", "e2[6,2]", "0", "1", "", ""},
    {"f3[1,3]", "e2[6,3]", "0", "1", "", ""},
    {"f3[1,3]", "e2[6,4]", "0", "1", "", ""},
    {"f3[1,3]", "e2[6,5]", "0", "1", "", ""},
    {"f3[1,3]", "e2[6,6]", "0", "1", "", ""},
    {"f3[1,4]", "e2[1,1]", "0", "1", "", ""},
    {"f3[1,4]", "e2[1,2]", "0", "1", "", ""},
    {"f3[1,4]", "e2[1,3]", "0", "1", "", ""},
    {"f3[1,4]", "e2[1,4]", "0", "1", "", ""},
    {"f3[1,4]", "e2[1,5]", "0", "1", "", ""},
    {"f3[1,4]", "e2[1,6]", "0", "1", "", ""},
    {"f3[1,4]", "e2[2,1]", "0", "1", "", ""},
    {"f3[1,4]", "e2[2,2]", "0", "1", "", ""},
    {"f3[1,4]", "e2[2,3]", "0", "1", "", ""},
    {"f3[1,4]", "e2[2,4]", "0", "1", "", ""},
    {"f3[1,4]", "e2[2,5]", "0", "1", "", ""},
    {"f3[1,4]", "e2[2,6]", "0", "1", "", ""},
    {"f3[1,4]", "e2[3,1]", "0", "1", "", ""},
    {"f3[1,4]", "e2[3,2]", "0", "1", "", ""},
    {"f3[1,4]", "e2[3,3]", "0", "1", "", ""},
    {"f3[1,4]", "e2[3,4]", "0", "1", "", ""},
    {"f3[1,4]", "e2[3,5]", "0", "1", "", ""},
    {"f3[1,4]", "e2[3,6]", "0", "1", "", ""},
    {"f3[1,4]", "e2[5,1]", "0", "1", "", ""},
    {"f3[1,4]", "e2[5,2]", "0", "1", "", ""},
    {"f3[1,4]", "e2[5,3]", "0", "1", "", ""},
    {"f3[1,4]", "e2[5,4]", "0", "1", "", ""},
    {"f3[1,4]", "e2[5,5]", "0", "1", "", ""},
    {"f3[1,4]", "e2[5,6]", "0", "1", "", ""},
    {"f3[1,4]", "e2[6,1]", "0", "1", "", ""},
    {"f3[1,4]", "e2[6,2]", "0", "1", "", ""},
    {"f3[1,4]", "e2[6,3]", "0", "1", "", ""},
    {"f3[1,4]", "e2[6,4]", "0", "1", "", ""},
    {"f3[1,4]", "e2[6,5]", "0", "1", "", ""},
    {"f3[1,4]", "e2[6,6]", "0", "1", "", ""},
    {"f3[1,5]", "e2[1,1]", "0", "1", "", ""},
    {"f3[1,5]", "e2[1,2]", "0", "1", "", ""},
    {"f3[1,5]", "e2[1,3]", "0", "1", "", ""},
    {"f3[1,5]", "e2[1,4]", "0", "1", "", ""},
    {"f3[1,5]", "e2[1,5]", "0", "1", "", ""},
    {"f3[1,5]", "e2[1,6]", "0", "1", "", ""},
    {"f3[1,5]", "e2[2,1]", "0", "1", "", ""},
    {"f3[1,5]", "e2[2,2]", "0", "1", "", ""},
    {"f3[1,5]", "e2[2,3]", "0", "1", "", ""},
    {"f3[1,5]", "e2[2,4]", "0", "1", "", ""},
    {"f3[1,5]", "e2[2,5]", "0", "1", "", ""},
    {"f3[1,5]", "e2[2,6]", "0", "1", "", ""},
    {"f3[1,5]", "e2[3,1]", "0", "1", "", ""},
    {"f3[1,5]", "e2[3,2]", "0", "1", "", ""},
    {"f3[1,5]", "e2[3,3]", "0", "1", "", ""},
    {"f3[1,5]", "e2[3,4]", "0", "1", "", ""},
    {"f3[1,5]", "e2[3,5]", "0", "1", "", ""},
    {"f3[1,5]", "e2[3,6]", "0", "1", "", ""},
    {"f3[1,5]", "e2[4,1]", "0", "1", "", ""},
    {"f3[1,5]", "e2[4,2]", "0", "1", "", ""},
    {"f3[1,5]", "e2[4,3]", "0", "1", "", ""},
    {"f3[1,5]", "e2[4,4]", "0", "1", "", ""},
    {"f3[1,5]", "e2[4,5]", "0", "1", "", ""},
    {"f3[1,5]", "e2[4,6]", "0", "1", "", ""},
    {"f3[1,5]", "e2[6,1]", "0", "1", "", ""},
    {"f3[1,5]", "e2[6,2]", "0", "1", "", ""},
    {"f3[1,5]", "e2[6,3]", "0", "1", "", ""},
    {"f3[1,5]", "e2[6,4]", "0", "1", "", ""},
    {"f3[1,5]", "e2[6,5]", "0", "1", "", ""},
    {"f3[1,5]", "e2[6,6]", "0", "1", "", ""},
    {"f3[2,1]", "e2[2,1]", "0", "1", "", ""},
    {"f3[2,1]", "e2[2,2]", "0", "1", "", ""},
    {"f3[2,1]", "e2[2,3]", "0", "1", "", ""},
    {"f3[2,1]", "e2[2,4]", "0", "1", "", ""},
    {"f3[2,1]", "e2[2,5]", "0", "1", "", ""},
    {"f3[2,1]", "e2[2,6]", "0", "1", "", ""},
    {"f3[2,1]", "e2[3,1]", "0", "1", "", ""},
    {"f3[2,1]", "e2[3,2]", "0", "1", "", ""},
    {"f3[2,1]", "e2[3,3]", "0", "1", "", ""},
    {"f3[2,1]", "e2[3,4]", "0", "1", "", ""},
    {"f3[2,1]", "e2[3,5]", "0", "1", "", ""},
    {"f3[2,1]", "e2[3,6]", "0", "1", "", ""},
    {"f3[2,1]", "e2[4,1]", "0", "1", "", ""},
    {"f3[2,1]", "e2[4,2]", "0", "1", "", ""},
    {"f3[2,1]", "e2[4,3]", "0", "1", "", ""},
    {"f3[2,1]", "e2[4,4]", "0", "1", "", ""},
    {"f3[2,1]", "e2[4,5]", "0", "1", "", ""},
    {"f3[2,1]", "e2[4,6]", "0", "1", "", ""},
    {"f3[2,1]", "e2[5,1]", "0", "1", "", ""},
    {"f3[2,1]", "e2[5,2]", "0", "1", "", ""},
    {"f3[2,1]", "e2[5,3]", "0", "1", "", ""},
    {"f3[2,1]", "e2[5,4]", "0", "1", "", ""},
    {"f3[2,1]", "e2[5,5]", "0", "1", "", ""},
    {"f3[2,1]", "e2[5,6]", "0", "1", "", ""},
    {"f3[2,1]", "e2[6,1]", "0", "1", "", ""},
    {"f3[2,1]", "e2[6,2]", "0", "1", "", ""},
    {"f3[2,1]", "e2[6,3]", "0", "1", "", ""},
    {"f3[2,1]", "e2[6,4]", "0", "1", "", ""},
    {"f3[2,1]", "e2[6,5]", "0", "1", "", ""},
    {"f3[2,1]", "e2[6,6]", "0", "1", "", ""},
    {"f3[2,2]", "e2[1,1]", "0", "1", "", ""},
    {"f3[2,2]", "e2[1,2]", "0", "1", "", ""},
    {"f3[2,2]", "e2[1,3]", "0", "1", "", ""},
    {"f3[2,2]", "e2[1,4]", "0", "1", "", ""},
    {"f3[2,2]", "e2[1,5]", "0", "1", "", ""},
    {"f3[2,2]", "e2[1,6]", "0", "1", "", ""},
    {"f3[2,2]", "e2[3,1]", "0", "1", "", ""},
    {"f3[2,2]", "e2[3,2]", "0", "1", "", ""},
    {"f3[2,2]", "e2[3,3]", "0", "1", "", ""},
    {"f3[2,2]", "e2[3,4]", "0", "1", "", ""},
    {"f3[2,2]", "e2[3,5]", "0", "1", "", ""},
    {"f3[2,2]", "e2[3,6]", "0", "1", "", ""},
    {"f3[2,2]", "e2[4,1]", "0", "1", "", ""},
    {"f3[2,2]", "e2[4,2]", "0", "1", "", ""},
    {"f3[2,2]", "e2[4,3]", "0", "1", "", ""},
    {"f3[2,2]", "e2[4,4]", "0", "1", "", ""},
    {"f3[2,2]", "e2[4,5]", "0", "1", "", ""},
    {"f3[2,2]", "e2[4,6]", "0", "1", "", ""},
    {"f3[2,2]", "e2[5,1]", "0", "1", "", ""},
    {"f3[2,2]", "e2[5,2]", "0", "1", "", ""},
    {"f3[2,2]", "e2[5,3]", "0", "1", "", ""},
    {"f3[2,2]", "e2[5,4]", "0", "1", "", ""},
    {"f3[2,2]", "e2[5,5]", "0", "1", "", ""},
    {"f3[2,2]", "e2[5,6]", "0", "1", "", ""},
    {"f3[2,2]", "e2[6,1]", "0", "1", "", ""},
    {"f3[2,2]", "e2[6,2]", "0", "1", "", ""},
    {"f3[2,2]", "e2[6,3]", "0", "1", "", ""},
    {"f3[2,2]", "e2[6,4]", "0", "1", "", ""},
    {"f3[2,2]", "e2[6,5]", "0", "1", "", ""},
    {"f3[2,2]", "e2[6,6]", "0", "1", "", ""},
    {"f3[2,3]", "e2[1,1]", "0", "1", "", ""},
    {"f3[2,3]", "e2[1,2]", "0", "1", "", ""},
    {"f3[2,3]", "e2[1,3]", "0", "1", "", ""},
    {"f3[2,3]", "e2[1,4]", "0", "1", "", ""},
    {"f3[2,3]", "e2[1,5]", "0", "1", "", ""},
    {"f3[2,3]", "e2[1,6]", "0", "1", "", ""},
    {"f3[2,3]", "e2[2,1]", "0", "1", "", ""},
    {"f3[2,3]", "e2[2,2]", "0", "1", "", ""},
    {"f3[2,3]", "e2[2,3]", "0", "1", "", ""},
    {"f3[2,3]", "e2[2,4]", "0", "1", "", ""},
    {"f3[2,3]", "e2[2,5]", "0", "1", "", ""},
    {"f3[2,3]", "e2[2,6]", "0", "1", "", ""},
    {"f3[2,3]", "e2[4,1]", "0", "1", "", ""},
    {"f3[2,3]", "e2[4,2]", "0", "1", "", ""},
    {"f3[2,3]", "e2[4,3]", "0", "1", "", ""},
    {"f3[2,3]", "e2[4,4]", "0", "1", "", ""},
    {"f3[2,3]", "e2[4,5]", "0", "1", "", ""},
    {"f3[2,3]", "e2[4,6]", "0", "1", "", ""},
    {"f3[2,3]", "e2[5,1]", "0", "1", "", ""},
    {"f3[2,3]", "e2[5,2]", "0", "1", "", ""},
    {"f3[2,3]", "e2[5,3]", "0", "1", "", ""},
    {"f3[2,3]", "e2[5,4]", "0", "1", "", ""},
    {"f3[2,3]", "e2[5,5]", "0", "1", "", ""},
    {"f3[2,3]", "e2[5,6]", "0", "1", "", ""},
    {"f3[2,3]", "e2[6,1]", "0", "1", "", ""},
    {"f3[2,3]", "e2[6,2]", "0", "1", "", ""},
    {"f3[2,3]", "e2[6,3]", "0", "1", "", ""},
    {"f3[2,3]", "e2[6,4]", "0", "1", "", ""},
    {"f3[2,3]", "e2[6,5]", "0", "1", "", ""},
    {"f3[2,3]", "e2[6,6]", "0", "1", "", ""},
    {"f3[2,4]", "e2[1,1]", "0", "1", "", ""},
    {"f3[2,4]", "e2[1,2]", "0", "1", "", ""},
    {"f3[2,4]", "e2[1,3]", "0", "1", "", ""},
    {"f3[2,4]", "e2[1,4]", "0", "1", "", ""},
    {"f3[2,4]", "e2[1,5]", "0", "1", "", ""},
    {"f3[2,4]", "e2[1,6]", "0", "1", "", ""},
    {"f3[2,4]", "e2[2,1]", "0", "1", "", ""},
    {"f3[2,4]", "e2[2,2]", "0", "1", "", ""},
    {"f3[2,4]", "e2[2,3]", "0", "1", "", ""},
    {"f3[2,4]", "e2[2,4]", "0", "1", "", ""},
    {"f3[2,4]", "e2[2,5]", "0", "1", "", ""},
    {"f3[2,4]", "e2[2,6]", "0", "1", "", ""},
    {"f3[2,4]", "e2[3,1]", "0", "1", "", ""},
    {"f3[2,4]", "e2[3,2]", "0", "1", "", ""},
    {"f3[2,4]", "e2[3,3]", "0", "1", "", ""},
    {"f3[2,4]", "e2[3,4]", "0", "1", "", ""},
    {"f3[2,4]", "e2[3,5]", "0", "1", "", ""},
    {"f3[2,4]", "e2[3,6]", "0", "1", "", ""},
    {"f3[2,4]", "e2[5,1]", "0", "1", "", ""},
    {"f3[2,4]", "e2[5,2]", "0", "1", "", ""},
    {"f3[2,4]", "e2[5,3]", "0", "1", "", ""},
    {"f3[2,4]", "e2[5,4]", "0", "1", "", ""},
    {"f3[2,4]", "e2[5,5]", "0", "1", "", ""},
    {"f3[2,4]", "e2[5,6]", "0", "1", "", ""},
    {"f3[2,4]", "e2[6,1]", "0", "1", "", ""},
    {"f3[2,4]", "e2[6,2]", "0", "1", "", ""},
    {"f3[2,4]", "e2[6,3]", "0", "1", "", ""},
    {"f3[2,4]", "e2[6,4]", "0", "1", "", ""},
    {"f3[2,4]", "e2[6,5]", "0", "1", "", ""},
    {"f3[2,4]", "e2[6,6]", "0", "1", "", ""},
    {"f3[2,5]", "e2[1,1]", "0", "1", "", ""},
    {"f3[2,5]", "e2[1,2]", "0", "1", "", ""},
    {"f3[2,5]", "e2[1,3]", "0", "1", "", ""},
    {"f3[2,5]", "e2[1,4]", "0", "1", "", ""},
    {"f3[2,5]", "e2[1,5]", "0", "1", "", ""},
    {"f3[2,5]", "e2[1,6]", "0", "1", "", ""},
    {"f3[2,5]", "e2[2,1]", "0", "1", "", ""},
    {"f3[2,5]", "e2[2,2]", "0", "1", "", ""},
    {"f3[2,5]", "e2[2,3]", "0", "1", "", ""},
    {"f3[2,5]", "e2[2,4]", "0", "1", "", ""},
    {"f3[2,5]", "e2[2,5]", "0", "1", "", ""},
    {"f3[2,5]", "e2[2,6]", "0", "1", "", ""},
    {"f3[2,5]", "e2[3,1]", "0", "1", "", ""},
    {"f3[2,5]", "e2[3,2]", "0", "1", "", ""},
    {"f3[2,5]", "e2[3,3]", "0", "1", "", ""},
    {"f3[2,5]", "e2[3,4]", "0", "1", "", ""},
    {"f3[2,5]", "e2[3,5]", "0", "1", "", ""},
    {"f3[2,5]", "e2[3,6]", "0", "1", "", ""},
    {"f3[2,5]", "e2[4,1]", "0", "1", "", ""},
    {"f3[2,5]", "e2[4,2]", "0", "1", "", ""},
    {"f3[2,5]", "e2[4,3]", "0", "1", "", ""},
    {"f3[2,5]", "e2[4,4]", "0", "1", "", ""},
    {"f3[2,5]", "e2[4,5]", "0", "1", "", ""},
    {"f3[2,5]", "e2[4,6]", "0", "1", "", ""},
    {"f3[2,5]", "e2[6,1]", "0", "1", "", ""},
    {"f3[2,5]", "e2[6,2]", "0", "1", "", ""},
    {"f3[2,5]", "e2[6,3]", "0", "1", "", ""},
    {"f3[2,5]", "e2[6,4]", "0", "1", "", ""},
    {"f3[2,5]", "e2[6,5]", "0", "1", "", ""},
    {"f3[2,5]", "e2[6,6]", "0", "1", "", ""},
    {"f3[3,1]", "e2[2,1]", "0", "1", "", ""},
    {"f3[3,1]", "e2[2,2]", "0", "1", "", ""},
    {"f3[3,1]", "e2[2,3]", "0", "1", "", ""},
    {"f3[3,1]", "e2[2,4]", "0", "1", "", ""},
    {"f3[3,1]", "e2[2,5]", "0", "1", "", ""},
    {"f3[3,1]", "e2[2,6]", "0", "1", "", ""},
    {"f3[3,1]", "e2[3,1]", "0", "1", "", ""},
    {"f3[3,1]", "e2[3,2]", "0", "1", "", ""},
    {"f3[3,1]", "e2[3,3]", "0", "1", "", ""},
    {"f3[3,1]", "e2[3,4]", "0", "1", "", ""},
    {"f3[3,1]", "e2[3,5]", "0", "1", "", ""},
    {"f3[3,1]", "e2[3,6]", "0", "1", "", ""},
    {"f3[3,1]", "e2[4,1]", "0", "1", "", ""},
    {"f3[3,1]", "e2[4,2]", "0", "1", "", ""},
    {"f3[3,1]", "e2[4,3]", "0", "1", "", ""},
    {"f3[3,1]", "e2[4,4]", "0", "1", "", ""},
    {"f3[3,1]", "e2[4,5]", "0", "1", "", ""},
    {"f3[3,1]", "e2[4,6]", "0", "1", "", ""},
    {"f3[3,1]", "e2[5,1]", "0", "1", "", ""},
    {"f3[3,1]", "e2[5,2]", "0", "1", "", ""},
    {"f3[3,1]", "e2[5,3]", "0", "1", "", ""},
    {"f3[3,1]", "e2[5,4]", "0", "1", "", ""},
    {"f3[3,1]", "e2[5,5]", "0", "1", "", ""},
    {"f3[3,1]", "e2[5,6]", "0", "1", "", ""},
    {"f3[3,1]", "e2[6,1]", "0", "1", "", ""},
    {"f3[3,1]", "e2[6,2]", "0", "1", "", ""},
    {"f3[3,1]", "e2[6,3]", "0", "1", "", ""},
    {"f3[3,1]", "e2[6,4]", "0", "1", "", ""},
    {"f3[3,1]", "e2[6,5]", "0", "1", "", ""},
    {"f3[3,1]", "e2[6,6]", "0", "1", "", ""},
    {"f3[3,2]", "e2[1,1]", "0", "1", "", ""},
    {"f3[3,2]", "e2[1,2]", "0", "1", "", ""},
    {"f3[3,2]", "e2[1,3]", "0", "1", "", ""},
    {"f3[3,2]", "e2[1,4]", "0", "1", "", ""},
    {"f3[3,2]", "e2[1,5]", "0", "1", "", ""},
    {"f3[3,2]", "e2[1,6]", "0", "1", "", ""},
    {"f3[3,2]", "e2[3,1]", "0", "1", "", ""},
    {"f3[3,2]", "e2[3,2]", "0", "1", "", ""},
    {"f3[3,2]", "e2[3,3]", "0", "1", "", ""},
    {"f3[3,2]", "e2[3,4]", "0", "1", "", ""},
    {"f3[3,2]", "e2[3,5]", "0", "1", "", ""},
    {"f3[3,2]", "e2[3,6]", "0", "1", "", ""},
    {"f3[3,2]", "e2[4,1]", "0", "1", "", ""},
    {"f3[3,2]", "e2[4,2]", "0", "1", "", ""},
    {"f3[3,2]", "e2[4,3]", "0", "1", "", ""},
    {"f3[3,2]", "e2[4,4]", "0", "1", "", ""},
    {"f3[3,2]", "e2[4,5]", "0", "1", "", ""},
    {"f3[3,2]", "e2[4,6]", "0", "1", "", ""},
    {"f3[3,2]", "e2[5,1]", "0", "1", "", ""},
    {"f3[3,2]", "e2[5,2]", "0", "1", "", ""},
    {"f3[3,2]", "e2[5,3]", "0", "1", "", ""},
    {"f3[3,2]", "e2[5,4]", "0", "1", "", ""},
    {"f3[3,2]", "e2[5,5]", "0", "1", "", ""},
    {"f3[3,2]", "e2[5,6]", "0", "1", "", ""},
    {"f3[3,2]", "e2[6,1]", "0", "1", "", ""},
    {"f3[3,2]", "e2[6,2]", "0", "1", "", ""},
    {"f3[3,2]", "e2[6,3]", "0", "1", "", ""},
    {"f3[3,2]", "e2[6,4]", "0", "1", "", ""},
    {"f3[3,2]", "e2[6,5]", "0", "1", "", ""},
    {"f3[3,2]", "e2[6,6]", "0", "1", "", ""},
    {"f3[3,3]", "e2[1,1]", "0", "1", "", ""},
    {"f3[3,3]", "e2[1,2]", "0", "1", "", ""},
    {"f3[3,3]", "e2[1,3]", "0", "1", "", ""},
    {"f3[3,3]", "e2[1,4]", "0", "1", "", ""},
    {"f3[3,3]", "e2[1,5]", "0", "1", "", ""},
    {"f3[3,3]", "e2[1,6]", "0", "1", "", ""},
    {"f3[3,3]", "e2[2,1]", "0", "1", "", ""},
    {"f3[3,3]", "e2[2,2]", "0", "1", "", ""},
    {"f3[3,3]", "e2[2,3]", "0", "1", "", ""},
    {"f3[3,3]", "e2[2,4]", "0", "1", "", ""},
    {"f3[3,3]", "e2[2,5]", "0", "1", "", ""},
    {"f3[3,3]", "e2[2,6]", "0", "1", "", ""},
    {"f3[3,3]", "e2[4,1]", "0", "1", "", ""},
    {"f3[3,3]", "e2[4,2]", "0", "1", "", ""},
    {"f3[3,3]", "e2[4,3]", "0", "1", "", ""},
    {"f3[3,3]", "e2[4,4]", "0", "1", "", ""},
    {"f3[3,3]", "e2[4,5]", "0", "1", "", ""},
    {"f3[3,3]", "e2[4,6]", "0", "1", "", ""},
    {"f3[3,3]", "e2[5,1]", "0", "1", "", ""},
    {"f3[3,3]", "e2[5,2]", "0", "1", "", ""},
    {"f3[3,3]", "e2[5,3]", "0", "1", "", ""},
    {"f3[3,3]", "e2[5,4]", "0", "1", "", ""},
    {"f3[3,3]", "e2[5,5]", "0", "1", "", ""},
    {"f3[3,3]", "e2[5,6]", "0", "1", "", ""},
    {"f3[3,3]", "e2[6,1]", "0", "1", "", ""},
    {"f3[3,3]", "e2[6,2]", "0", "1", "", ""},
    {"f3[3,3]", "e2[6,3]", "0", "1", "", ""},
    {"f3[3,3]", "e2[6,4]", "0", "1", "", ""},
    {"f3[3,3]", "e2[6,5]", "0", "1", "", ""},
    {"f3[3,3]", "e2[6,6]", "0", "1", "", ""},
    {"f3[3,4]", "e2[1,1]", "0", "1", "", ""},
    {"f3[3,4]", "e2[1,2]", "0", "1", "", ""},
    {"f3[3,4]", "e2[1,3]", "0", "1", "", ""},
    {"f3[3,4]", "e2[1,4]", "0", "1", "", ""},
    {"f3[3,4]", "e2[1,5]", "0", "1", "", ""},
    {"f3[3,4]", "e2[1,6]", "0", "1", "", ""},
    {"f3[3,4]", "e2[2,1]", "0", "1", "", ""},
    {"f3[3,4]", "e2[2,2]", "0", "1", "", ""},
    {"f3[3,4]", "e2[2,3]", "0", "1", "", ""},
    {"f3[3,4]", "e2[2,4]", "0", "1", "", ""},
    {"f3[3,4]", "e2[2,5]", "0", "1", "", ""},
    {"f3[3,4]", "e2[2,6]", "0", "1", "", ""},
    {"f3[3,4]", "e2[3,1]", "0", "1", "", ""},
    {"f3[3,4]", "e2[3,2]", "0", "1", "", ""},
    {"f3[3,4]", "e2[3,3]", "0", "1", "", ""},
    {"f3[3,4]", "e2[3,4]", "0", "1", "", ""},
    {"f3[3,4]", "e2[3,5]", "0", "1", "", ""},
    {"f3[3,4]", "e2[3,6]", "0", "1", "", ""},
    {"f3[3,4]", "e2[5,1]", "0", "1", "", ""},
    {"f3[3,4]", "e2[5,2]", "0", "1", "", ""},
    {"f3[3,4]", "e2[5,3]", "0", "1", "", ""},
    {"f3[3,4]", "e2[5,4]", "0", "1", "", ""},
    {"f3[3,4]", "e2[5,5]", "0", "1", "", ""},
    {"f3[3,4]", "e2[5,6]", "0", "1", "", ""},
    {"f3[3,4]", "e2[6,1]", "0", "1", "", ""},
    {"f3[3,4]", "e2[6,2]", "0", "1", "", ""},
    {"f3[3,4]", "e2[6,3]", "0", "1", "", ""},
    {"f3[3,4]", "e2[6,4]", "0", "1", "", ""},
    {"f3[3,4]", "e2[6,5]", "0", "1", "", ""},
    {"f3[3,4]", "e2[6,6]", "0", "1", "", ""},
    {"f3[3,5]", "e2[1,1]", "0", "1", "", ""},
    {"f3[3,5]", "e2[1,2]", "0", "1", "", ""},
    {"f3[3,5]", "e2[1,3]", "0", "1", "", ""},
    {"f3[3,5]", "e2[1,4]", "0", "1", "", ""},
    {"f3[3,5]", "e2[1,5]", "0", "1", "", ""},
    {"f3[3,5]", "e2[1,6]", "0", "1", "", ""},
    {"f3[3,5]", "e2[2,1]", "0", "1", "", ""},
    {"f3[3,5]", "e2[2,2]", "0", "1", "", ""},
    {"f3[3,5]", "e2[2,3]", "0", "1", "", ""},
    {"f3[3,5]", "e2[2,4]", "0", "1", "", ""},
    {"f3[3,5]", "e2[2,5]", "0", "1", "", ""},
    {"f3[3,5]", "e2[2,6]", "0", "1", "", ""},
    {"f3[3,5]", "e2[3,1]", "0", "1", "", ""},
    {"f3[3,5]", "e2[3,2]", "0", "1", "", ""},
    {"f3[3,5]", "e2[3,3]", "0", "1", "", ""},
    {"f3[3,5]", "e2[3,4]", "0", "1", "", ""},
    {"f3[3,5]", "e2[3,5]", "0", "1", "", ""},
    {"f3[3,5]", "e2[3,6]", "0", "1", "", ""},
    {"f3[3,5]", "e2[4,1]", "0", "1", "", ""},
    {"f3[3,5]", "e2[4,2]", "0", "1", "", ""},
    {"f3[3,5]", "e2[4,3]", "0", "1", "", ""},
    {"f3[3,5]", "e2[4,4]", "0", "1", "", ""},
    {"f3[3,5]", "e2[4,5]", "0", "1", "", ""},
    {"f3[3,5]", "e2[4,6]", "0", "1", "", ""},
    {"f3[3,5]", "e2[6,1]", "0", "1", "", ""},
    {"f3[3,5]", "e2[6,2]", "0", "1", "", ""},
    {"f3[3,5]", "e2[6,3]", "0", "1", "", ""},
    {"f3[3,5]", "e2[6,4]", "0", "1", "", ""},
    {"f3[3,5]", "e2[6,5]", "0", "1", "", ""},
    {"f3[3,5]", "e2[6,6]", "0", "1", "", ""},
    {"f3[4,1]", "e2[2,1]", "0", "1", "", ""},
    {"f3[4,1]", "e2[2,2]", "0", "1", "", ""},
    {"f3[4,1]", "e2[2,3]", "0", "1", "", ""},
    {"f3[4,1]", "e2[2,4]", "0", "1", "", ""},
    {"f3[4,1]", "e2[2,5]", "0", "1", "", ""},
    {"f3[4,1]", "e2[2,6]", "0", "1", "", ""},
    {"f3[4,1]", "e2[3,1]", "0", "1", "", ""},
    {"f3[4,1]", "e2[3,2]", "0", "1", "", ""},
    {"f3[4,1]", "e2[3,3]", "0", "1", "", ""},
    {"f3[4,1]", "e2[3,4]", "0", "1", "", ""},
    {"f3[4,1]", "e2[3,5]", "0", "1", "", ""},
    {"f3[4,1]", "e2[3,6]", "0", "1", "", ""},
    {"f3[4,1]", "e2[4,1]", "0", "1", "", ""},
    {"f3[4,1]", "e2[4,2]", "0", "1", "", ""},
    {"f3[4,1]", "e2[4,3]", "0", "1", "", ""},
    {"f3[4,1]", "e2[4,4]", "0", "1", "", ""},
    {"f3[4,1]", "e2[4,5]", "0", "1", "", ""},
    {"f3[4,1]", "e2[4,6]", "0", "1", "", ""},
    {"f3[4,1]", "e2[5,1]", "0", "1", "", ""},
    {"f3[4,1]", "e2[5,2]", "0", "1", "", ""},
    {"f3[4,1]", "e2[5,3]", "0", "1", "", ""},
    {"f3[4,1]", "e2[5,4]", "0", "1", "", ""},
    {"f3[4,1]", "e2[5,5]", "0", "1", "", ""},
    {"f3[4,1]", "e2[5,6]", "0", "1", "", ""},
    {"f3[4,1]", "e2[6,1]", "0", "1", "", ""},
    {"f3[4,1]", "e2[6,2]", "0", "1", "", ""},
    {"f3[4,1]", "e2[6,3]", "0", "1", "", ""},
    {"f3[4,1]", "e2[6,4]", "0", "1", "", ""},
    {"f3[4,1]", "e2[6,5]", "0", "1", "", ""},
    {"f3[4,1]", "e2[6,6]", "0", "1", "", ""},
    {"f3[4,2]", "e2[1,1]", "0", "1", "", ""},
    {"f3[4,2]", "e2[1,2]", "0", "1", "", ""},
    {"f3[4,2]", "e2[1,3]", "0", "1", "", ""},
    {"f3[4,2]", "e2[1,4]", "0", "1", "", ""},
    {"f3[4,2]", "e2[1,5]", "0", "1", "", ""},
    {"f3[4,2]", "e2[1,6]", "0", "1", "", ""},
    {"f3[4,2]", "e2[3,1]", "0", "1", "", ""},
    {"f3[4,2]", "e2[3,2]", "0", "1", "", ""},
    {"f3[4,2]", "e2[3,3]", "0", "1", "", ""},
    {"f3[4,2]", "e2[3,4]", "0", "1", "", ""},
    {"f3[4,2]", "e2[3,5]", "0", "1", "", ""},
    {"f3[4,2]", "e2[3,6]", "0", "1", "", ""},
    {"f3[4,2]", "e2[4,1]", "0", "1", "", ""},
    {"f3[4,2]", "e2[4,2]", "0", "1", "", ""},
    {"f3[4,2]", "e2[4,3]", "0", "1", "", ""},
    {"f3[4,2]", "e2[4,4]", "0", "1", "", ""},
    {"f3[4,2]", "e2[4,5]", "0", "1", "", ""},
    {"f3[4,2]", "e2[4,6]", "0", "1", "", ""},
    {"f3[4,2]", "e2[5,1]", "0", "1", "", ""},
    {"f3[4,2]", "e2[5,2]", "0", "1", "", ""},
    {"f3[4,2]", "e2[5,3]", "0", "1", "", ""},
    {"f3[4,2]", "e2[5,4]", "0", "1", "", ""},
    {"f3[4,2]", "e2[5,5]", "0", "1", "", ""},
    {"f3[4,2]", "e2[5,6]", "0", "1", "", ""},
    {"f3[4,2]", "e2[6,1]", "0", "1", "", ""},
    {"f3[4,2]", "e2[6,2]", "0", "1", "", ""},
    {"f3[4,2]", "e2[6,3]", "0", "1", "", ""},
    {"f3[4,2]", "e2[6,4]", "0", "1", "", ""},
    {"f3[4,2]", "e2[6,5]", "0", "1", "", ""},
    {"f3[4,2]", "e2[6,6]", "0", "1", "", ""},
    {"f3[4,3]", "e2[1,1]", "0", "1", "", ""},
    {"f3[4,3]", "e2[1,2]", "0", "1", "", ""},
    {"f3[4,3]", "e2[1,3]", "0", "1", "", ""},
    {"f3[4,3]", "e2[1,4]", "0", "1", "", ""},
    {"f3[4,3]", "e2[1,5]", "0", "1", "", ""},
    {"f3[4,3]", "e2[1,6]", "0", "1", "", ""},
    {"f3[4,3]", "e2[2,1]", "0", "1", "", ""},
    {"f3[4,3]", "e2[2,2]", "0", "1", "", ""},
    {"f3[4,3]", "e2[2,3]", "0", "1", "", ""},
    {"f3[4,3]", "e2[2,4]", "0", "1", "", ""},
    {"f3[4,3]", "e2[2,5]", "0", "1", "", ""},
    {"f3[4,3]", "e2[2,6]", "0", "1", "", ""},
    {"f3[4,3]", "e2[4,1]", "0", "1", "", ""},
    {"f3[4,3]", "e2[4,2]", "0", "1", "", ""},
    {"f3[4,3]", "e2[4,3]", "0", "1", "", ""},
    {"f3[4,3]", "e2[4,4]", "0", "1", "", ""},
    {"f3[4,3]", "e2[4,5]", "0", "1", "", ""},
    {"f3[4,3]", "e2[4,6]", "0", "1", "", ""},
    {"f3[4,3]", "e2[5,1]", "0", "1", "", ""},
    {"f3[4,3]", "e2[5,2]", "0", "1", "", ""},
    {"f3[4,3]", "e2[5,3]", "0", "1", "", ""},
    {"f3[4,3]", "e2[5,4]", "0", "1", "", ""},
    {"f3[4,3]", "e2[5,5]", "0", "1", "", ""},
    {"f3[4,3]", "e2[5,6]", "0", "1", "", ""},
    {"f3[4,3]", "e2[6,1]", "0", "1", "", ""},
    {"f3[4,3]", "e2[6,2]", "0", "1", "", ""},
    {"f3[4,3]", "e2[6,3]", "0", "1", "", ""},
    {"f3[4,3]", "e2[6,4]", "0", "1", "", ""},
    {"f3[4,3]", "e2[6,5]", "0", "1", "", ""},
    {"f3[4,3]", "e2[6,6]", "0", "1", "", ""},
    {"f3[4,4]", "e2[1,1]", "0", "1", "", ""},
    {"f3[4,4]", "e2[1,2]", "0", "1", "", ""},
    {"f3[4,4]", "e2[1,3]", "0", "1", "", ""},
    {"f3[4,4]", "e2[1,4]", "0", "1", "", ""},
    {"f3[4,4]", "e2[1,5]", "0", "1", "", ""},
    {"f3[4,4]", "e2[1,6]", "0", "1", "", ""},
    {"f3[4,4]", "e2[2,1]", "0", "1", "", ""},
    {"f3[4,4]", "e2[2,2]", "0", "1", "", ""},
    {"f3[4,4]", "e2[2,3]", "0", "1", "", ""},
    {"f3[4,4]", "e2[2,4]", "0", "1", "", ""},
    {"f3[4,4]", "e2[2,5]", "0", "1", "", ""},
    {"f3[4,4]", "e2[2,6]", "0", "1", "", ""},
    {"f3[4,4]", "e2[3,1]", "0", "1", "", ""},
    {"f3[4,4]", "e2[3,2]", "0", "1", "", ""},
    {"f3[4,4]", "e2[3,3]", "0", "1", "", ""},
    {"f3[4,4]", "e2[3,4]", "0", "1", "", ""},
    {"f3[4,4]", "e2[3,5]", "0", "1", "", ""},
    {"f3[4,4]", "e2[3,6]", "0", "1", "", ""},
    {"f3[4,4]", "e2[5,1]", "0", "1", "", ""},
    {"f3[4,4]", "e2[5,2]", "0", "1", "", ""},
    {"f3[4,4]", "e2[5,3]", "0", "1", "", ""},
    {"f3[4,4]", "e2[5,4]", "0", "1", "", ""},
    {"f3[4,4]", "e2[5,5]", "0", "1", "", ""},
    {"f3[4,4]", "e2[5,6]", "0", "1", "", ""},
    {"f3[4,4]", "e2[6,1]", "0", "1", "", ""},
    {"f3[4,4]", "e2[6,2]", "0", "1", "", ""},
    {"f3[4,4]", "e2[6,3]", "0", "1", "", ""},
    {"f3[4,4]", "e2[6,4]", "0", "1", "", ""},
    {"f3[4,4]", "e2[6,5]", "0", "1", "", ""},
    {"f3[4,4]", "e2[6,6]", "0", "1", "", ""},
    {"f3[4,5]", "e2[1,1]", "0", "1", "", ""},
    {"f3[4,5]", "e2[1,2]", "0", "1", "", ""},
    {"f3[4,5]", "e2[1,3]", "0", "1", "", ""},
    {"f3[4,5]", "e2[1,4]", "0", "1", "", ""},
    {"f3[4,5]", "e2[1,5]", "0", "1", "", ""},
    {"f3[4,5]", "e2[1,6]", "0", "1", "", ""},
    {"f3[4,5]", "e2[2,1]", "0", "1", "", ""},
    {"f3[4,5]", "e2[2,2]", "0", "1", "", ""},
    {"f3[4,5]", "e2[2,3]", "0", "1", "", ""},
    {"f3[4,5]", "e2[2,4]", "0", "1", "", ""},
    {"f3[4,5]", "e2[2,5]", "0", "1", "", ""},
    {"f3[4,5]", "e2[2,6]", "0", "1", "", ""},
    {"f3[4,5]", "e2[3,1]", "0", "1", "", ""},
    {"f3[4,5]", "e2[3,2]", "0", "1", "", ""},
    {"f3[4,5]", "e2[3,3]", "0", "1", "", ""},
    {"f3[4,5]", "e2[3,4]", "0", "1", "", ""},
    {"f3[4,5]", "e2[3,5]", "0", "1", "", ""},
    {"f3[4,5]", "e2[3,6]", "0", "1", "", ""},
    {"f3[4,5]", "e2[4,1]", "0", "1", "", ""},
    {"f3[4,5]", "e2[4,2]", "0", "1", "", ""},
    {"f3[4,5]", "e2[4,3]", "0", "1", "", ""},
    {"f3[4,5]", "e2[4,4]", "0", "1", "", ""},
    {"f3[4,5]", "e2[4,5]", "0", "1", "", ""},
    {"f3[4,5]", "e2[4,6]", "0", "1", "", ""},
    {"f3[4,5]", "e2[6,1]", "0", "1", "", ""},
    {"f3[4,5]", "e2[6,2]", "0", "1", "", ""},
    {"f3[4,5]", "e2[6,3]", "0", "1", "", ""},
    {"f3[4,5]", "e2[6,4]", "0", "1", "", ""},
    {"f3[4,5]", "e2[6,5]", "0", "1", "", ""},
    {"f3[4,5]", "e2[6,6]", "0", "1", "", ""},
    {"f3[5,1]", "e2[2,1]", "0", "1", "", ""},
    {"f3[5,1]", "e2[2,2]", "0", "1", "", ""},
    {"f3[5,1]", "e2[2,3]", "0", "1", "", ""},
    {"f3[5,1]", "e2[2,4]", "0", "1", "", ""},
    {"f3[5,1]", "e2[2,5]", "0", "1", "", ""},
    {"f3[5,1]", "e2[2,6]", "0", "1", "", ""},
    {"f3[5,1]", "e2[3,1]", "0", "1", "", ""},
    {"f3[5,1]", "e2[3,2]", "0", "1", "", ""},
    {"f3[5,1]", "e2[3,3]", "0", "1", "", ""},
    {"f3[5,1]", "e2[3,4]", "0", "1", "", ""},
    {"f3[5,1]", "e2[3,5]", "0", "1", "", ""},
    {"f3[5,1]", "e2[3,6]", "0", "1", "", ""},
    {"f3[5,1]", "e2[4,1]", "0", "1", "", ""},
    {"f3[5,1]", "e2[4,2]", "0", "1", "", ""},
    {"f3[5,1]", "e2[4,3]", "0", "1", "", ""},
    {"f3[5,1]", "e2[4,4]", "0", "1", "", ""},
    {"f3[5,1]", "e2[4,5]", "0", "1", "", ""},
    {"f3[5,1]", "e2[4,6]", "0", "1", "", ""},
    {"f3[5,1]", "e2[5,1]", "0", "1", "", ""},
    {"f3[5,1]", "e2[5,2]", "0", "1", "", ""},
    {"f3[5,1]", "e2[5,3]", "0", "1", "", ""},
    {"f3[5,1]", "e2[5,4]", "0", "1", "", ""},
    {"f3[5,1]", "e2[5,5]", "0", "1", "", ""},
    {"f3[5,1]", "e2[5,6]", "0", "1", "", ""},
    {"f3[5,1]", "e2[6,1]", "0", "1", "", ""},
    {"f3[5,1]", "e2[6,2]", "0", "1", "", ""},
    {"f3[5,1]", "e2[6,3]", "0", "1", "", ""},
    {"f3[5,1]", "e2[6,4]", "0", "1", "", ""},
    {"f3[5,1]", "e2[6,5]", "0", "1", "", ""},
    {"f3[5,1]", "e2[6,6]", "0", "1", "", ""},
    {"f3[5,2]", "e2[1,1]", "0", "1", "", ""},
    {"f3[5,2]", "e2[1,2]", "0", "1", "", ""},
    {"f3[5,2]", "e2[1,3]", "0", "1", "", ""},
    {"f3[5,2]", "e2[1,4]", "0", "1", "", ""},
    {"f3[5,2]", "e2[1,5]", "0", "1", "", ""},
    {"f3[5,2]", "e2[1,6]", "0", "1", "", ""},
    {"f3[5,2]", "e2[3,1]", "0", "1", "", ""},
    {"f3[5,2]", "e2[3,2]", "0", "1", "", ""},
    {"f3[5,2]", "e2[3,3]", "0", "1", "", ""},
    {"f3[5,2]", "e2[3,4]", "0", "1", "", ""},
    {"f3[5,2]", "e2[3,5]", "0", "1", "", ""},
    {"f3[5,2]", "e2[3,6]", "0", "1", "", ""},
    {"f3[5,2]", "e2[4,1]", "0", "1", "", ""},
    {"f3[5,2]", "e2[4,2]", "0", "1", "", ""},
    {"f3[5,2]", "e2[4,3]", "0", "1", "", ""},
    {"f3[5,2]", "e2[4,4]", "0", "1", "", ""},
    {"f3[5,2]", "e2[4,5]", "0", "1", "", ""},
    {"f3[5,2]", "e2[4,6]", "0", "1", "", ""},
    {"f3[5,2]", "e2[5,1]", "0", "1", "", ""},
    {"f3[5,2]", "e2[5,2]", "0", "1", "", ""},
    {"f3[5,2]", "e2[5,3]", "0", "1", "", ""},
    {"f3[5,2]", "e2[5,4]", "0", "1", "", ""},
    {"f3[5,2]", "e2[5,5]", "0", "1", "", ""},
    {"f3[5,2]", "e2[5,6]", "0", "1", "", ""},
    {"f3[5,2]", "e2[6,1]", "0", "1", "", ""},
    {"f3[5,2]", "e2[6,2]", "0", "1", "", ""},
    {"f3[5,2]", "e2[6,3]", "0", "1", "", ""},
    {"f3[5,2]", "e2[6,4]", "0", "1", "", ""},
    {"f3[5,2]", "e2[6,5]", "0", "1", "", ""},
    {"f3[5,2]", "e2[6,6]", "0", "1", "", ""},
    {"f3[5,3]", "e2[1,1]", "0", "1", "", ""},
    {"f3[5,3]", "e2[1,2]", "0", "1", "", ""},
    {"f3[5,3]", "e2[1,3]", "0", "1", "", ""},
    {"f3[5,3]", "e2[1,4]", "0", "1", "", ""},
    {"f3[5,3]", "e2[1,5]", "0", "1", "", ""},
    {"f3[5,3]", "e2[1,6]", "0", "1", "", ""},
    {"f3[5,3]", "e2[2,1]", "0", "1", "", ""},
    {"f3[5,3]", "e2[2,2]", "0", "1", "", ""},
    {"f3[5,3]", "e2[2,3]", "0", "1", "", ""},
    {"f3[5,3]", "e2[2,4]", "0", "1", "", ""},
    {"f3[5,3]", "e2[2,5]", "0", "1", "", ""},
    {"f3[5,3]", "e2[2,6]", "0", "1", "", ""},
    {"f3[5,3]", "e2[4,1]", "0", "1", "", ""},
    {"f3[5,3]", "e2[4,2]", "0", "1", "", ""},
    {"f3[5,3]", "e2[4,3]", "0", "1", "", ""},
    {"f3[5,3]", "e2[4,4]", "0", "1", "", ""},
    {"f3[5,3]", "e2[4,5]", "0", "1", "", ""},
    {"f3[5,3]", "e2[4,6]", "0", "1", "", ""},
    {"f3[5,3]", "e2[5,1]", "0", "1", "", ""},
    {"f3[5,3]", "e2[5,2]", "0", "1", "", ""},
    {"f3[5,3]", "e2[5,3]", "0", "1", "", ""},
    {"f3[5,3]", "e2[5,4]", "0", "1", "", ""},
    {"f3[5,3]", "e2[5,5]", "0", "1", "", ""},
    {"f3[5,3]", "e2[5,6]", "0", "1", "", ""},
    {"f3[5,3]", "e2[6,1]", "0", "1", "", ""},
    {"f3[5,3]", "e2[6,2]", "0", "1", "", ""},
    {"f3[5,3]", "e2[6,3]", "0", "1", "", ""},
    {"f3[5,3]", "e2[6,4]", "0", "1", "", ""},
    {"f3[5,3]", "e2[6,5]", "0", "1", "", ""},
    {"f3[5,3]", "e2[6,6]", "0", "1", "", ""},
    {"f3[5,4]", "e2[1,1]", "0", "1", "", ""},
    {"f3[5,4]", "e2[1,2]", "0", "1", "", ""},
    {"f3[5,4]", "e2[1,3]", "0", "1", "", ""},
    {"f3[5,4]", "e2[1,4]", "0", "1", "", ""},
    {"f3[5,4]", "e2[1,5]", "0", "1", "", ""},
    {"f3[5,4]", "e2[1,6]", "0", "1", "", ""},
    {"f3[5,4]", "e2[2,1]", "0", "1", "", ""},
    {"f3[5,4]", "e2[2,2]", "0", "1", "", ""},
    {"f3[5,4]", "e2[2,3]", "0", "1", "", ""},
    {"f3[5,4]", "e2[2,4]", "0", "1", "", ""},
    {"f3[5,4]", "e2[2,5]", "0", "1", "", ""},
    {"f3[5,4]", "e2[2,6]", "0", "1", "", ""},
    {"f3[5,4]", "e2[3,1]", "0", "1", "", ""},
    {"f3[5,4]", "e2[3,2]", "0", "1", "", ""},
    {"f3[5,4]", "e2[3,3]", "0", "1", "", ""},
    {"f3[5,4]", "e2[3,4]", "0", "1", "", ""},
    {"f3[5,4]", "e2[3,5]", "0", "1", "", ""},
    {"f3[5,4]", "e2[3,6]", "0", "1", "", ""},
    {"f3[5,4]", "e2[5,1]", "0", "1", "", ""},
    {"f3[5,4]", "e2[5,2]", "0", "1", "", ""},
    {"f3[5,4]", "e2[5,3]", "0", "1", "", ""},
    {"f3[5,4]", "e2[5,4]", "0", "1", "", ""},
    {"f3[5,4]", "e2[5,5]", "0", "1", "", ""},
    {"f3[5,4]", "e2[5,6]", "0", "1", "", ""},
    {"f3[5,4]", "e2[6,1]", "0", "1", "", ""},
    {"f3[5,4]", "e2[6,2]", "0", "1", "", ""},
    {"f3[5,4]", "e2[6,3]", "0", "1", "", ""},
    {"f3[5,4]", "e2[6,4]", "0", "1", "", ""},
    {"f3[5,4]", "e2[6,5]", "0", "1", "", ""},
    {"f3[5,4]", "e2[6,6]", "0", "1", "", ""},
    {"f3[5,5]", "e2[1,1]", "0", "1", "", ""},
    {"f3[5,5]", "e2[1,2]", "0", "1", "", ""},
    {"f3[5,5]", "e2[1,3]", "0", "1", "", ""},
    {"f3[5,5]", "e2[1,4]", "0", "1", "", ""},
    {"f3[5,5]", "e2[1,5]", "0", "1", "", ""},
    {"f3[5,5]", "e2[1,6]", "0", "1", "", ""},
    {"f3[5,5]", "e2[2,1]", "0", "1", "", ""},
    {"f3[5,5]", "e2[2,2]", "0", "1", "", ""},
    {"f3[5,5]", "e2[2,3]", "0", "1", "", ""},
    {"f3[5,5]", "e2[2,4]", "0", "1", "", ""},
    {"f3[5,5]", "e2[2,5]", "0", "1", "", ""},
    {"f3[5,5]", "e2[2,6]", "0", "1", "", ""},
    {"f3[5,5]", "e2[3,1]", "0", "1", "", ""},
    {"f3[5,5]", "e2[3,2]", "0", "1", "", ""},
    {"f3[5,5]", "e2[3,3]", "0", "1", "", ""},
    {"f3[5,5]", "e2[3,4]", "0", "1", "", ""},
    {"f3[5,5]", "e2[3,5]", "0", "1", "", ""},
    {"f3[5,5]", "e2[3,6]", "0", "1", "", ""},
    {"f3[5,5]", "e2[4,1]", "0", "1", "", ""},
    {"f3[5,5]", "e2[4,2]", "0", "1", "", ""},
    {"f3[5,5]", "e2[4,3]", "0", "1", "", ""},
    {"f3[5,5]", "e2[4,4]", "0", "1", "", ""},
    {"f3[5,5]", "e2[4,5]", "0", "1", "", ""},
    {"f3[5,5]", "e2[4,6]", "0", "1", "", ""},
    {"f3[5,5]", "e2[6,1]", "0", "1", "", ""},
    {"f3[5,5]", "e2[6,2]", "0", "1", "", ""},
    {"f3[5,5]", "e2[6,3]", "0", "1", "", ""},
    {"f3[5,5]", "e2[6,4]", "0", "1", "", ""},
    {"f3[5,5]", "e2[6,5]", "0", "1", "", ""},
    {"f3[5,5]", "e2[6,6]", "0", "1", "", ""},
    {"f1[1,1]", "e1[1,1]", "1", "1", "f1[1,2]", "e1[2,1]"},
    {"f1[1,1]", "e1[1,2]", "1", "1", "f1[1,2]", "e1[2,2]"},
    {"f1[2,1]", "e1[1,1]", "1", "1", "f1[2,2]", "e1[2,1]"},
    {"f1[2,1]", "e1[1,2]", "1", "1", "f1[2,2]", "e1[2,2]"},
    {"f1[3,1]", "e1[1,1]", "1", "1", "f1[3,2]", "e1[2,1]"},
    {"f1[3,1]", "e1[1,2]", "1", "1", "f1[3,2]", "e1[2,2]"},
    {"f1[4,1]", "e1[1,1]", "1", "1", "f1[4,2]", "e1[2,1]"},
    {"f1[4,1]", "e1[1,2]", "1", "1", "f1[4,2]", "e1[2,2]"},
    {"f1[1,1]", "e1[2,1]", "0", "1", "", ""},
    {"f1[1,1]", "e1[2,2]", "0", "1", "", ""},
    {"f1[1,2]", "e1[1,1]", "0", "1", "", ""},
    {"f1[1,2]", "e1[1,2]", "0", "1", "", ""},
    {"f1[1,3]", "e1[1,1]", "0", "1", "", ""},
    {"f1[1,3]", "e1[1,2]", "0", "1", "", ""},
    {"f1[1,3]", "e1[2,1]", "0", "1", "", ""},
    {"f1[1,3]", "e1[2,2]", "0", "1", "", ""},
    {"f1[1,4]", "e1[1,1]", "0", "1", "", ""},
    {"f1[1,4]", "e1[1,2]", "0", "1", "", ""},
    {"f1[1,4]", "e1[2,1]", "0", "1", "", ""},
    {"f1[1,4]", "e1[2,2]", "0", "1", "", ""},
    {"f1[2,1]", "e1[2,1]", "0", "1", "", ""},
    {"f1[2,1]", "e1[2,2]", "0", "1", "", ""},
    {"f1[2,2]", "e1[1,1]", "0", "1", "", ""},
    {"f1[2,2]", "e1[1,2]", "0", "1", "", ""},
    {"f1[2,3]", "e1[1,1]", "0", "1", "", ""},
    {"f1[2,3]", "e1[1,2]", "0", "1", "", ""},
    {"f1[2,3]", "e1[2,1]", "0", "1", "", ""},
    {"f1[2,3]", "e1[2,2]", "0", "1", "", ""},
    {"f1[2,4]", "e1[1,1]", "0", "1", "", ""},
    {"f1[2,4]", "e1[1,2]", "0", "1", "", ""},
    {"f1[2,4]", "e1[2,1]", "0", "1", "", ""},
    {"f1[2,4]", "e1[2,2]", "0", "1", "", ""},
    {"f1[3,1]", "e1[2,1]", "0", "1", "", ""},
    {"f1[3,1]", "e1[2,2]", "0", "1", "", ""},
    {"f1[3,2]", "e1[1,1]", "0", "1", "", ""},
    {"f1[3,2]", "e1[1,2]", "0", "1", "", ""},
    {"f1[3,3]", "e1[1,1]", "0", "1", "", ""},
    {"f1[3,3]", "e1[1,2]", "0", "1", "", ""},
    {"f1[3,3]", "e1[2,1]", "0", "1", "", ""},
    {"f1[3,3]", "e1[2,2]", "0", "1", "", ""},
    {"f1[3,4]", "e1[1,1]", "0", "1", "", ""},
    {"f1[3,4]", "e1[1,2]", "0", "1", "", ""},
    {"f1[3,4]", "e1[2,1]", "0", "1", "", ""},
    {"f1[3,4]", "e1[2,2]", "0", "1", "", ""},
    {"f1[4,1]", "e1[2,1]", "0", "1", "", ""},
    {"f1[4,1]", "e1[2,2]", "0", "1", "", ""},
    {"f1[4,2]", "e1[1,1]", "0", "1", "", ""},
    {"f1[4,2]", "e1[1,2]", "0", "1", "", ""},
    {"f1[4,3]", "e1[1,1]", "0", "1", "", ""},
    {"f1[4,3]", "e1[1,2]", "0", "1", "", ""},
    {"f1[4,3]", "e1[2,1]", "0", "1", "", ""},
    {"f1[4,3]", "e1[2,2]", "0", "1", "", ""},
    {"f1[4,4]", "e1[1,1]", "0", "1", "", ""},
    {"f1[4,4]", "e1[1,2]", "0", "1", "", ""},
    {"f1[4,4]", "e1[2,1]", "0", "1", "", ""},
    {"f1[4,4]", "e1[2,2]", "0", "1", "", ""},
    {"f1[1,1]", "e2[1,1]", "1", "1", "f1[1,2]", "e2[2,1]"},
    {"f1[1,2]", "e2[2,1]", "1", "1", "f1[1,3]", "e2[4,1]"},
    {"f1[1,3]", "e2[4,1]", "1", "1", "f1[1,4]", "e2[6,1]"},
    {"f1[1,1]", "e2[1,2]", "1", "1", "f1[1,2]", "e2[2,2]"},
    {"f1[1,2]", "e2[2,2]", "1", "1", "f1[1,3]", "e2[4,2]"},
    {"f1[1,3]", "e2[4,2]", "1", "1", "f1[1,4]", "e2[6,2]"},
    {"f1[1,1]", "e2[1,3]", "1", "1", "f1[1,2]", "e2[2,3]"},
    {"f1[1,2]", "e2[2,3]", "1", "1", "f1[1,3]", "e2[4,3]"},
    {"f1[1,3]", "e2[4,3]", "1", "1", "f1[1,4]", "e2[6,3]"},
    {"f1[1,1]", "e2[1,4]", "1", "1", "f1[1,2]", "e2[2,4]"},
    {"f1[1,2]", "e2[2,4]", "1", "1", "f1[1,3]", "e2[4,4]"},
    {"f1[1,3]", "e2[4,4]", "1", "1", "f1[1,4]", "e2[6,4]"},
    {"f1[1,1]", "e2[1,5]", "1", "1", "f1[1,2]", "e2[2,5]"},
    {"f1[1,2]", "e2[2,5]", "1", "1", "f1[1,3]", "e2[4,5]"},
    {"f1[1,3]", "e2[4,5]", "1", "1", "f1[1,4]", "e2[6,5]"},
    {"f1[1,1]", "e2[1,6]", "1", "1", "f1[1,2]", "e2[2,6]"},
    {"f1[1,2]", "e2[2,6]", "1", "1", "f1[1,3]", "e2[4,6]"},
    {"f1[1,3]", "e2[4,6]", "1", "1", "f1[1,4]", "e2[6,6]"},
    {"f1[2,1]", "e2[1,1]", "1", "1", "f1[2,2]", "e2[2,1]"},
    {"f1[2,2]", "e2[2,1]", "1", "1", "f1[2,3]", "e2[4,1]"},
    {"f1[2,3]", "e2[4,1]", "1", "1", "f1[2,4]", "e2[6,1]"},
    {"f1[2,1]", "e2[1,2]", "1", "1", "f1[2,2]", "e2[2,2]"},
    {"f1[2,2]", "e2[2,2]", "1", "1", "f1[2,3]", "e2[4,2]"},
    {"f1[2,3]", "e2[4,2]", "1", "1", "f1[2,4]", "e2[6,2]"},
    {"f1[2,1]", "e2[1,3]", "1", "1", "f1[2,2]", "e2[2,3]"},
    {"f1[2,2]", "e2[2,3]", "1", "1", "f1[2,3]", "e2[4,3]"},
    {"f1[2,3]", "e2[4,3]", "1", "1", "f1[2,4]", "e2[6,3]"},
    {"f1[2,1]", "e2[1,4]", "1", "1", "f1[2,2]", "e2[2,4]"},
    {"f1[2,2]", "e2[2,4]", "1", "1", "f1[2,3]", "e2[4,4]"},
    {"f1[2,3]", "e2[4,4]", "1", "1", "f1[2,4]", "e2[6,4]"},
    {"f1[2,1]", "e2[1,5]", "1", "1", "f1[2,2]", "e2[2,5]"},
    {"f1[2,2]", "e2[2,5]", "1", "1", "f1[2,3]", "e2[4,5]"},
    {"f1[2,3]", "e2[4,5]", "1", "1", "f1[2,4]", "e2[6,5]"},
    {"f1[2,1]", "e2[1,6]", "1", "1", "f1[2,2]", "e2[2,6]"},
    {"f1[2,2]", "e2[2,6]", "1", "1", "f1[2,3]", "e2[4,6]"},
    {"f1[2,3]", "e2[4,6]", "1", "1", "f1[2,4]", "e2[6,6]"},
    {"f1[3,1]", "e2[1,1]", "1", "1", "f1[3,2]", "e2[2,1]"},
    {"f1[3,2]", "e2[2,1]", "1", "1", "f1[3,3]", "e2[4,1]"},
    {"f1[3,3]", "e2[4,1]", "1", "1", "f1[3,4]", "e2[6,1]"},
    {"f1[3,1]", "e2[1,2]", "1", "1", "f1[3,2]", "e2[2,2]"},
    {"f1[3,2]", "e2[2,2]", "1", "1", "f1[3,3]", "e2[4,2]"},
    {"f1[3,3]", "e2[4,2]", "1", "1", "f1[3,4]", "e2[6,2]"},
    {"f1[3,1]", "e2[1,3]", "1", "1", "f1[3,2]", "e2[2,3]"},
    {"f1[3,2]", "e2[2,3]", "1", "1", "f1[3,3]", "e2[4,3]"},
    {"f1[3,3]", "e2[4,3]", "1", "1", "f1[3,4]", "e2[6,3]"},
    {"f1[3,1]", "e2[1,4]", "1", "1", "f1[3,2]", "e2[2,4]"},
    {"f1[3,2]", "e2[2,4]", "1", "1", "f1[3,3]", "e2[4,4]"},
    {"f1[3,3]", "e2[4,4]", "1", "1", "f1[3,4]", "e2[6,4]"},
    {"f1[3,1]", "e2[1,5]", "1", "1", "f1[3,2]", "e2[2,5]"},
    {"f1[3,2]", "e2[2,5]", "1", "1", "f1[3,3]", "e2[4,5]"},
    {"f1[3,3]", "e2[4,5]", "1", "1", "f1[3,4]", "e2[6,5]"},
    {"f1[3,1]", "e2[1,6]", "1", "1", "f1[3,2]", "e2[2,6]"},
    {"f1[3,2]", "e2[2,6]", "1", "1", "f1[3,3]", "e2[4,6]"},
    {"f1[3,3]", "e2[4,6]", "1", "1", "f1[3,4]", "e2[6,6]"},
    {"f1[4,1]", "e2[1,1]", "1", "1", "f1[4,2]", "e2[2,1]"},
    {"f1[4,2]", "e2[2,1]", "1", "1", "f1[4,3]", "e2[4,1]"},
    {"f1[4,3]", "e2[4,1]", "1", "1", "f1[4,4]", "e2[6,1]"},
    {"f1[4,1]", "e2[1,2]", "1", "1", "f1[4,2]", "e2[2,2]"},
    {"f1[4,2]", "e2[2,2]", "1", "1", "f1[4,3]", "e2[4,2]"},
    {"f1[4,3]", "e2[4,2]", "1", "1", "f1[4,4]", "e2[6,2]"},
    {"f1[4,1]", "e2[1,3]", "1", "1", "f1[4,2]", "e2[2,3]"},
    {"f1[4,2]", "e2[2,3]", "1", "1", "f1[4,3]", "e2[4,3]"},
    {"f1[4,3]", "e2[4,3]", "1", "1", "f1[4,4]", "e2[6,3]"},
    {"f1[4,1]", "e2[1,4]", "1", "1", "f1[4,2]", "e2[2,4]"},
    {"f1[4,2]", "e2[2,4]", "1", "1", "f1[4,3]", "e2[4,4]"},
    {"f1[4,3]", "e2[4,4]", "1", "1", "f1[4,4]", "e2[6,4]"},
    {"f1[4,1]", "e2[1,5]", "1", "1", "f1[4,2]", "e2[2,5]"},
    {"f1[4,2]", "e2[2,5]", "1", "1", "f1[4,3]", "e2[4,5]"},
    {"f1[4,3]", "e2[4,5]", "1", "1", "f1[4,4]", "e2[6,5]"},
    {"f1[4,1]", "e2[1,6]", "1", "1", "f1[4,2]", "e2[2,6]"},
    {"f1[4,2]", "e2[2,6]", "1", "1", "f1[4,3]", "e2[4,6]"},
    {"f1[4,3]", "e2[4,6]", "1", "1", "f1[4,4]", "e2[6,6]"},
    {"f1[1,1]", "e2[2,1]", "0", "1", "", ""},
    {"f1[1,1]", "e2[2,2]", "0", "1", "", ""},
    {"f1[1,1]", "e2[2,3]", "0", "1", "", ""},
    {"f1[1,1]", "e2[2,4]", "0", "1", "", ""},
    {"f1[1,1]", "e2[2,5]", "0", "1", "", ""},
    {"f1[1,1]", "e2[2,6]", "0", "1", "", ""},
    {"f1[1,1]", "e2[3,1]", "0", "1", "", ""},
    {"f1[1,1]", "e2[3,2]", "0", "1", "", ""},
    {"f1[1,1]", "e2[3,3]", "0", "1", "", ""},
    {"f1[1,1]", "e2[3,4]", "0", "1", "", ""},
    {"f1[1,1]", "e2[3,5]", "0", "1", "", ""},
    {"f1[1,1]", "e2[3,6]", "0", "1", "", ""},
    {"f1[1,1]", "e2[4,1]", "0", "1", "", ""},
    {"f1[1,1]", "e2[4,2]", "0", "1", "", ""},
    {"f1[1,1]", "e2[4,3]", "0", "1", "", ""},
    {"f1[1,1]", "e2[4,4]", "0", "1", "", ""},
    {"f1[1,1]", "e2[4,5]", "0", "1", "", ""},
    {"f1[1,1]", "e2[4,6]", "0", "1", "", ""},
    {"f1[1,1]", "e2[5,1]", "0", "1", "", ""},
    {"f1[1,1]", "e2[5,2]", "0", "1", "", ""},
    {"f1[1,1]", "e2[5,3]", "0", "1", "", ""},
    {"f1[1,1]", "e2[5,4]", "0", "1", "", ""},
    {"f1[1,1]", "e2[5,5]", "0", "1", "", ""},
    {"f1[1,1]", "e2[5,6]", "0", "1", "", ""},
    {"f1[1,1]", "e2[6,1]", "0", "1", "", ""},
    {"f1[1,1]", "e2[6,2]", "0", "1", "", ""},
    {"f1[1,1]", "e2[6,3]", "0", "1", "", ""},
    {"f1[1,1]", "e2[6,4]", "0", "1", "", ""},
    {"f1[1,1]", "e2[6,5]", "0", "1", "", ""},
    {"f1[1,1]", "e2[6,6]", "0", "1", "", ""},
    {"f1[1,2]", "e2[1,1]", "0", "1", "", ""},
    {"f1[1,2]", "e2[1,2]", "0", "1", "", ""},
    {"f1[1,2]", "e2[1,3]", "0", "1", "", ""},
    {"f1[1,2]", "e2[1,4]", "0", "1", "", ""},
    {"f1[1,2]", "e2[1,5]", "0", "1", "", ""},
    {"f1[1,2]", "e2[1,6]", "0", "1", "", ""},
    {"f1[1,2]", "e2[3,1]", "0", "1", "", ""},
    {"f1[1,2]", "e2[3,2]", "0", "1", "", ""},
    {"f1[1,2]", "e2[3,3]", "0", "1", "", ""},
    {"f1[1,2]", "e2[3,4]", "0", "1", "", ""},
    {"f1[1,2]", "e2[3,5]", "0", "1", "", ""},
    {"f1[1,2]", "e2[3,6]", "0", "1", "", ""},
    {"f1[1,2]", "e2[4,1]", "0", "1", "", ""},
    {"f1[1,2]", "e2[4,2]", "0", "1", "", ""},
    {"f1[1,2]", "e2[4,3]", "0", "1", "", ""},
    {"f1[1,2]", "e2[4,4]", "0", "1", "", ""},
    {"f1[1,2]", "e2[4,5]", "0", "1", "", ""},
    {"f1[1,2]", "e2[4,6]", "0", "1", "", ""},
    {"f1[1,2]", "e2[5,1]", "0", "1", "", ""},
    {"f1[1,2]", "e2[5,2]", "0", "1", "", ""},
    {"f1[1,2]", "e2[5,3]", "0", "1", "", ""},
    {"f1[1,2]", "e2[5,4]", "0", "1", "", ""},
    {"f1[1,2]", "e2[5,5]", "0", "1", "", ""},
    {"f1[1,2]", "e2[5,6]", "0", "1", "", ""},
    {"f1[1,2]", "e2[6,1]", "0", "1", "", ""},
    {"f1[1,2]", "e2[6,2]", "0", "1", "", ""},
    {"f1[1,2]", "e2[6,3]", "0", "1", "", ""},
    {"f1[1,2]", "e2[6,4]", "0", "1", "", ""},
    {"f1[1,2]", "e2[6,5]", "0", "1", "", ""},
    {"f1[1,2]", "e2[6,6]", "0", "1", "", ""},
    {"f1[1,3]", "e2[1,1]", "0", "1", "", ""},
    {"f1[1,3]", "e2[1,2]", "0", "1", "", ""},
    {"f1[1,3]", "e2[1,3]", "0", "1", "", ""},
    {"f1[1,3]", "e2[1,4]", "0", "1", "", ""},
    {"f1[1,3]", "e2[1,5]", "0", "1", "", ""},
    {"f1[1,3]", "e2[1,6]", "0", "1", "", ""},
    {"f1[1,3]", "e2[2,1]", "0", "1", "", ""},
    {"f1[1,3]", "e2[2,2]", "0", "1", "", ""},
    {"f1[1,3]", "e2[2,3]", "0", "1", "", ""},
    {"f1[1,3]", "e2[2,4]", "0", "1", "", ""},
    {"f1[1,3]", "e2[2,5]", "0", "1", "", ""},
    {"f1[1,3]", "e2[2,6]", "0", "1", "", ""},
    {"f1[1,3]", "e2[3,1]", "0", "1", "", ""},
    {"f1[1,3]", "e2[3,2]", "0", "1", "", ""},
    {"f1[1,3]", "e2[3,3]", "0", "1", "", ""},
    {"f1[1,3]", "e2[3,4]", "0", "1", "", ""},
    {"f1[1,3]", "e2[3,5]", "0", "1", "", ""},
    {"f1[1,3]", "e2[3,6]", "0", "1", "", ""},
    {"f1[1,3]", "e2[5,1]", "0", "1", "", ""},
    {"f1[1,3]", "e2[5,2]", "0", "1", "", ""},
    {"f1[1,3]", "e2[5,3]", "0", "1", "", ""},
    {"f1[1,3]", "e2[5,4]", "0", "1", "", ""},
    {"f1[1,3]", "e2[5,5]", "0", "1", "", ""},
    {"f1[1,3]", "e2[5,6]", "0", "1", "", ""},
    {"f1[1,3]", "e2[6,1]", "0", "1", "", ""},
    {"f1[1,3]", "e2[6,2]", "0", "1", "", ""},
    {"f1[1,3]", "e2[6,3]", "0", "1", "", ""},
    {"f1[1,3]", "e2[6,4]", "0", "1", "", ""},
    {"f1[1,3]", "e2[6,5]", "0", "1", "", ""},
    {"f1[1,3]", "e2[6,6]", "0", "1", "", ""},
    {"f1[1,4]", "e2[1,1]", "0", "1", "", ""},
    {"f1[1,4]", "e2[1,2]", "0", "1", "", ""},
    {"f1[1,4]", "e2[1,3]", "0", "1", "", ""},
    {"f1[1,4]", "e2[1,4]", "0", "1", "", ""},
    {"f1[1,4]", "e2[1,5]", "0", "1", "", ""},
    {"f1[1,4]", "e2[1,6]", "0", "1", "", ""},
    {"f1[1,4]", "e2[2,1]", "0", "1", "", ""},
    {"f1[1,4]", "e2[2,2]", "0", "1", "", ""},
    {"f1[1,4]", "e2[2,3]", "0", "1", "", ""},
    {"f1[1,4]", "e2[2,4]", "0", "1", "", ""},
    {"f1[1,4]", "e2[2,5]", "0", "1", "", ""},
    {"f1[1,4]", "e2[2,6]", "0", "1", "", ""},
    {"f1[1,4]", "e2[3,1]", "0", "1", "", ""},
    {"f1[1,4]", "e2[3,2]", "0", "1", "", ""},
    {"f1[1,4]", "e2[3,3]", "0", "1", "", ""},
    {"f1[1,4]", "e2[3,4]", "0", "1", "", ""},
    {"f1[1,4]", "e2[3,5]", "0", "1", "", ""},
    {"f1[1,4]", "e2[3,6]", "0", "1", "", ""},
    {"f1[1,4]", "e2[4,1]", "0", "1", "", ""},
    {"f1[1,4]", "e2[4,2]", "0", "1", "", ""},
    {"f1[1,4]", "e2[4,3]", "0", "1", "", ""},
    {"f1[1,4]", "e2[4,4]", "0", "1", "", ""},
    {"f1[1,4]", "e2[4,5]", "0", "1", "", ""},
    {"f1[1,4]", "e2[4,6]", "0", "1", "", ""},
    {"f1[1,4]", "e2[5,1]", "0", "1", "", ""},
    {"f1[1,4]", "e2[5,2]", "0", "1", "", ""},
    {"f1[1,4]", "e2[5,3]", "0", "1", "", ""},
    {"f1[1,4]", "e2[5,4]", "0", "1", "", ""},
    {"f1[1,4]", "e2[5,5]", "0", "1", "", ""},
    {"f1[1,4]", "e2[5,6]", "0", "1", "", ""},
    {"f1[2,1]", "e2[2,1]", "0", "1", "", ""},
    {"f1[2,1]", "e2[2,2]", "0", "1", "", ""},
    {"f1[2,1]", "e2[2,3]", "0", "1", "", ""},
    {"f1[2,1]", "e2[2,4]", "0", "1", "", ""},
    {"f1[2,1]", "e2[2,5]", "0", "1", "", ""},
    {"f1[2,1]", "e2[2,6]", "0", "1", "", ""},
    {"f1[2,1]", "e2[3,1]", "0", "1", "", ""},
    {"f1[2,1]", "e2[3,2]", "0", "1", "", ""},
    {"f1[2,1]", "e2[3,3]", "0", "1", "", ""},
    {"f1[2,1]", "e2[3,4]", "0", "1", "", ""},
    {"f1[2,1]", "e2[3,5]", "0", "1", "", ""},
    {"f1[2,1]", "e2[3,6]", "0", "1", "", ""},
    {"f1[2,1]", "e2[4,1]", "0", "1", "", ""},
    {"f1[2,1]", "e2[4,2]", "0", "1", "", ""},
    {"f1[2,1]", "e2[4,3]", "0", "1", "", ""},
    {"f1[2,1]", "e2[4,4]", "0", "1", "", ""},
    {"f1[2,1]", "e2[4,5]", "0", "1", "", ""},
    {"f1[2,1]", "e2[4,6]", "0", "1", "", ""},
    {"f1[2,1]", "e2[5,1]", "0", "1", "", ""},
    {"f1[2,1]", "e2[5,2]", "0", "1", "", ""},
    {"f1[2,1]", "e2[5,3]", "0", "1", "", ""},
    {"f1[2,1]", "e2[5,4]", "0", "1", "", ""},
    {"f1[2,1]", "e2[5,5]", "0", "1", "", ""},
    {"f1[2,1]", "e2[5,6]", "0", "1", "", ""},
    {"f1[2,1]", "e2[6,1]", "0", "1", "", ""},
    {"f1[2,1]", "e2[6,2]", "0", "1", "", ""},
    {"f1[2,1]", "e2[6,3]", "0", "1", "", ""},
    {"f1[2,1]", "e2[6,4]", "0", "1", "", ""},
    {"f1[2,1]", "e2[6,5]", "0", "1", "", ""},
    {"f1[2,1]", "e2[6,6]", "0", "1", "", ""},
    {"f1[2,2]", "e2[1,1]", "0", "1", "", ""},
    {"f1[2,2]", "e2[1,2]", "0", "1", "", ""},
    {"f1[2,2]", "e2[1,3]", "0", "1", "", ""},
    {"f1[2,2]", "e2[1,4]", "0", "1", "", ""},
    {"f1[2,2]", "e2[1,5]", "0", "1", "", ""},
    {"f1[2,2]", "e2[1,6]", "0", "1", "", ""},
    {"f1[2,2]", "e2[3,1]", "0", "1", "", ""},
    {"f1[2,2]", "e2[3,2]", "0", "1", "", ""},
    {"f1[2,2]", "e2[3,3]", "0", "1", "", ""},
    {"f1[2,2]", "e2[3,4]", "0", "1", "", ""},
    {"f1[2,2]", "e2[3,5]", "0", "1", "", ""},
    {"f1[2,2]", "e2[3,6]", "0", "1", "", ""},
    {"f1[2,2]", "e2[4,1]", "0", "1", "", ""},
    {"f1[2,2]", "e2[4,2]", "0", "1", "", ""},
    {"f1[2,2]", "e2[4,3]", "0", "1", "", ""},
    {"f1[2,2]", "e2[4,4]", "0", "1", "", ""},
    {"f1[2,2]", "e2[4,5]", "0", "1", "", ""},
    {"f1[2,2]", "e2[4,6]", "0", "1", "", ""},
    {"f1[2,2]", "e2[5,1]", "0", "1", "", ""},
    {"f1[2,2]", "e2[5,2]", "0", "1", "", ""},
    {"f1[2,2]", "e2[5,3]", "0", "1", "", ""},
    {"f1[2,2]", "e2[5,4]", "0", "1", "", ""},
    {"f1[2,2]", "e2[5,5]", "0", "1", "", ""},
    {"f1[2,2]", "e2[5,6]", "0", "1", "", ""},
    {"f1[2,2]", "e2[6,1]", "0", "1", "", ""},
    {"f1[2,2]", "e2[6,2]", "0", "1", "", ""},
    {"f1[2,2]", "e2[6,3]", "0", "1", "", ""},
    {"f1[2,2]", "e2[6,4]", "0", "1", "", ""},
    {"f1[2,2]", "e2[6,5]", "0", "1", "", ""},
    {"f1[2,2]", "e2[6,6]", "0", "1", "", ""},
    {"f1[2,3]", "e2[1,1]", "0", "1", "", ""},
    {"f1[2,3]", "e2[1,2]", "0", "1", "", ""},
    {"f1[2,3]", "e2[1,3]", "0", "1", "", ""},
    {"f1[2,3]", "e2[1,4]", "0", "1", "", ""},
    {"f1[2,3]", "e2[1,5]", "0", "1", "", ""},
    {"f1[2,3]", "e2[1,6]", "0", "1", "", ""},
    {"f1[2,3]", "e2[2,1]", "0", "1", "", ""},
    {"f1[2,3]", "e2[2,2]", "0", "1", "", ""},
    {"f1[2,3]", "e2[2,3]", "0", "1", "", ""},
    {"f1[2,3]", "e2[2,4]", "0", "1", "", ""},
    {"f1[2,3]", "e2[2,5]", "0", "1", "", ""},
    {"f1[2,3]", "e2[2,6]", "0", "1", "", ""},
    {"f1[2,3]", "e2[3,1]", "0", "1", "", ""},
    {"f1[2,3]", "e2[3,2]", "0", "1", "", ""},
    {"f1[2,3]", "e2[3,3]", "0", "1", "", ""},
    {"f1[2,3]", "e2[3,4]", "0", "1", "", ""},
    {"f1[2,3]", "e2[3,5]", "0", "1", "", ""},
    {"f1[2,3]", "e2[3,6]", "0", "1", "", ""},
    {"f1[2,3]", "e2[5,1]", "0", "1", "", ""},
    {"f1[2,3]", "e2[5,2]", "0", "1", "", ""},
    {"f1[2,3]", "e2[5,3]", "0", "1", "", ""},
    {"f1[2,3]", "e2[5,4]", "0", "1", "", ""},
    {"f1[2,3]", "e2[5,5]", "0", "1", "", ""},
    {"f1[2,3]", "e2[5,6]", "0", "1", "", ""},
    {"f1[2,3]", "e2[6,1]", "0", "1", "", ""},
    {"f1[2,3]", "e2[6,2]", "0", "1", "", ""},
    {"f1[2,3]", "e2[6,3]", "0", "1", "", ""},
    {"f1[2,3]", "e2[6,4]", "0", "1", "", ""},
    {"f1[2,3]", "e2[6,5]", "0", "1", "", ""},
    {"f1[2,3]", "e2[6,6]", "0", "1", "", ""},
    {"f1[2,4]", "e2[1,1]", "0", "1", "", ""},
    {"f1[2,4]", "e2[1,2]", "0", "1", "", ""},
    {"f1[2,4]", "e2[1,3]", "0", "1", "", ""},
    {"f1[2,4]", "e2[1,4]", "0", "1", "", ""},
    {"f1[2,4]", "e2[1,5]", "0", "1", "", ""},
    {"f1[2,4]", "e2[1,6]", "0", "1", "", ""},
    {"f1[2,4]", "e2[2,1]", "0", "1", "", ""},
    {"f1[2,4]", "e2[2,2]", "0", "1", "", ""},
    {"f1[2,4]", "e2[2,3]", "0", "1", "", ""},
    {"f1[2,4]", "e2[2,4]", "0", "1", "", ""},
    {"f1[2,4]", "e2[2,5]", "0", "1", "", ""},
    {"f1[2,4]", "e2[2,6]", "0", "1", "", ""},
    {"f1[2,4]", "e2[3,1]", "0", "1", "", ""},
    {"f1[2,4]", "e2[3,2]", "0", "1", "", ""},
    {"f1[2,4]", "e2[3,3]", "0", "1", "", ""},
    {"f1[2,4]", "e2[3,4]", "0", "1", "", ""},
    {"f1[2,4]", "e2[3,5]", "0", "1", "", ""},
    {"f1[2,4]", "e2[3,6]", "0", "1", "", ""},
    {"f1[2,4]", "e2[4,1]", "0", "1", "", ""},
    {"f1[2,4]", "e2[4,2]", "0", "1", "", ""},
    {"f1[2,4]", "e2[4,3]", "0", "1", "", ""},
    {"f1[2,4]", "e2[4,4]", "0", "1", "", ""},
    {"f1[2,4]", "e2[4,5]", "0", "1", "", ""},
    {"f1[2,4]", "e2[4,6]", "0", "1", "", ""},
    {"f1[2,4]", "e2[5,1]", "0", "1", "", ""},
    {"f1[2,4]", "e2[5,2]", "0", "1", "", ""},
    {"f1[2,4]", "e2[5,3]", "0", "1", "", ""},
    {"f1[2,4]", "e2[5,4]", "0", "1", "", ""},
    {"f1[2,4]", "e2[5,5]", "0", "1", "", ""},
    {"f1[2,4]", "e2[5,6]", "0", "1", "", ""},
    {"f1[3,1]", "e2[2,1]", "0", "1", "", ""},
    {"f1[3,1]", "e2[2,2]", "0", "1", "", ""},
    {"f1[3,1]", "e2[2,3]", "0", "1", "", ""},
    {"f1[3,1]", "e2[2,4]", "0", "1", "", ""},
    {"f1[3,1]", "e2[2,5]", "0", "1", "", ""},
    {"f1[3,1]", "e2[2,6]", "0", "1", "", ""},
    {"f1[3,1]", "e2[3,1]", "0", "1", "", ""},
    {"f1[3,1]", "e2[3,2]", "0", "1", "", ""},
    {"f1[3,1]", "e2[3,3]", "0", "1", "", ""},
    {"f1[3,1]", "e2[3,4]", "0", "1", "", ""},
    {"f1[3,1]", "e2[3,5]", "0", "1", "", ""},
    {"f1[3,1]", "e2[3,6]", "0", "1", "", ""},
    {"f1[3,1]", "e2[4,1]", "0", "1", "", ""},
    {"f1[3,1]", "e2[4,2]", "0", "1", "", ""},
    {"f1[3,1]", "e2[4,3]", "0", "1", "", ""},
    {"f1[3,1]", "e2[4,4]", "0", "1", "", ""},
    {"f1[3,1]", "e2[4,5]", "0", "1", "", ""},
    {"f1[3,1]", "e2[4,6]", "0", "1", "", ""},
    {"f1[3,1]", "e2[5,1]", "0", "1", "", ""},
    {"f1[3,1]", "e2[5,2]", "0", "1", "", ""},
    {"f1[3,1]", "e2[5,3]", "0", "1", "", ""},
    {"f1[3,1]", "e2[5,4]", "0", "1", "", ""},
    {"f1[3,1]", "e2[5,5]", "0", "1", "", ""},
    {"f1[3,1]", "e2[5,6]", "0", "1", "", ""},
    {"f1[3,1]", "e2[6,1]", "0", "1", "", ""},
    {"f1[3,1]", "e2[6,2]", "0", "1", "", ""},
    {"f1[3,1]", "e2[6,3]", "0", "1", "", ""},
    {"f1[3,1]", "e2[6,4]", "0", "1", "", ""},
    {"f1[3,1]", "e2[6,5]", "0", "1", "", ""},
    {"f1[3,1]", "e2[6,6]", "0", "1", "", ""},
    {"f1[3,2]", "e2[1,1]", "0", "1", "", ""},
    {"f1[3,2]", "e2[1,2]", "0", "1", "", ""},
    {"f1[3,2]", "e2[1,3]", "0", "1", "", ""},
    {"f1[3,2]", "e2[1,4]", "0", "1", "", ""},
    {"f1[3,2]", "e2[1,5]", "0", "1", "", ""},
    {"f1[3,2]", "e2[1,6]", "0", "1", "", ""},
    {"f1[3,2]", "e2[3,1]", "0", "1", "", ""},
    {"f1[3,2]", "e2[3,2]", "0", "1", "", ""},
    {"f1[3,2]", "e2[3,3]", "0", "1", "", ""},
    {"f1[3,2]", "e2[3,4]", "0", "1", "", ""},
    {"f1[3,2]", "e2[3,5]", "0", "1", "", ""},
    {"f1[3,2]", "e2[3,6]", "0", "1", "", ""},
    {"f1[3,2]", "e2[4,1]", "0", "1", "", ""},
    {"f1[3,2]", "e2[4,2]", "0", "1", "", ""},
    {"f1[3,2]", "e2[4,3]", "0", "1", "", ""},
    {"f1[3,2]", "e2[4,4]", "0", "1", "", ""},
    {"f1[3,2]", "e2[4,5]", "0", "1", "", ""},
    {"f1[3,2]", "e2[4,6]", "0", "1", "", ""},
    {"f1[3,2]", "e2[5,1]", "0", "1", "", ""},
    {"f1[3,2]", "e2[5,2]", "0", "1", "", ""},
    {"f1[3,2]", "e2[5,3]", "0", "1", "", ""},
    {"f1[3,2]", "e2[5,4]", "0", "1", "", ""},
    {"f1[3,2]", "e2[5,5]", "0", "1", "", ""},
    {"f1[3,2]", "e2[5,6]", "0", "1", "", ""},
    {"f1[3,2]", "e2[6,1]", "0", "1", "", ""},
    {"f1[3,2]", "e2[6,2]", "0", "1", "", ""},
    {"f1[3,2]", "e2[6,3]", "0", "1", "", ""},
    {"f1[3,2]", "e2[6,4]", "0", "1", "", ""},
    {"f1[3,2]", "e2[6,5]", "0", "1", "", ""},
    {"f1[3,2]", "e2[6,6]", "0", "1", "", ""},
    {"f1[3,3]", "e2[1,1]", "0", "1", "", ""},
    {"f1[3,3]", "e2[1,2]", "0", "1", "", ""},
    {"f1[3,3]", "e2[1,3]", "0", "1", "", ""},
    {"f1[3,3]", "e2[1,4]", "0", "1", "", ""},
    {"f1[3,3]", "e2[1,5]", "0", "1", "", ""},
    {"f1[3,3]", "e2[1,6]", "0", "1", "", ""},
    {"f1[3,3]", "e2[2,1]", "0", "1", "", ""},
    {"f1[3,3]", "e2[2,2]", "0", "1", "", ""},
    {"f1[3,3]", "e2[2,3]", "0", "1", "", ""},
    {"f1[3,3]", "e2[2,4]", "0", "1", "", ""},
    {"f1[3,3]", "e2[2,5]", "0", "1", "", ""},
    {"f1[3,3]", "e2[2,6]", "0", "1", "", ""},
    {"f1[3,3]", "e2[3,1]", "0", "1", "", ""},
    {"f1[3,3]", "e2[3,2]", "0", "1", "", ""},
    {"f1[3,3]", "e2[3,3]", "0", "1", "", ""},
    {"f1[3,3]", "e2[3,4]", "0", "1", "", ""},
    {"f1[3,3]", "e2[3,5]", "0", "1", "", ""},
    {"f1[3,3]", "e2[3,6]", "0", "1", "", ""},
    {"f1[3,3]", "e2[5,1]", "0", "1", "", ""},
    {"f1[3,3]", "e2[5,2]", "0", "1", "", ""},
    {"f1[3,3]", "e2[5,3]", "0", "1", "", ""},
    {"f1[3,3]", "e2[5,4]", "0", "1", "", ""},
    {"f1[3,3]", "e2[5,5]", "0", "1", "", ""},
    {"f1[3,3]", "e2[5,6]", "0", "1", "", ""},
    {"f1[3,3]", "e2[6,1]", "0", "1", "", ""},
    {"f1[3,3]", "e2[6,2]", "0", "1", "", ""},
    {"f1[3,3]", "e2[6,3]", "0", "1", "", ""},
    {"f1[3,3]", "e2[6,4]", "0", "1", "", ""},
    {"f1[3,3]", "e2[6,5]", "0", "1", "", ""},
    {"f1[3,3]", "e2[6,6]", "0", "1", "", ""},
    {"f1[3,4]", "e2[1,1]", "0", "1", "", ""},
    {"f1[3,4]", "e2[1,2]", "0", "1", "", ""},
    {"f1[3,4]", "e2[1,3]", "0", "1", "", ""},
    {"f1[3,4]", "e2[1,4]", "0", "1", "", ""},
    {"f1[3,4]", "e2[1,5]", "0", "1", "", ""},
    {"f1[3,4]", "e2[1,6]", "0", "1", "", ""},
    {"f1[3,4]", "e2[2,1]", "0", "1", "", ""},
    {"f1[3,4]", "e2[2,2]", "0", "1", "", ""},
    {"f1[3,4]", "e2[2,3]", "0", "1", "", ""},
    {"f1[3,4]", "e2[2,4]", "0", "1", "", ""},
    {"f1[3,4]", "e2[2,5]", "0", "1", "", ""},
    {"f1[3,4]", "e2[2,6]", "0", "1", "", ""},
    {"f1[3,4]", "e2[3,1]", "0", "1", "", ""},
    {"f1[3,4]", "e2[3,2]", "0", "1", "", ""},
    {"f1[3,4]", "e2[3,3]", "0", "1", "", ""},
    {"f1[3,4]", "e2[3,4]", "0", "1", "", ""},
    {"f1[3,4]", "e2[3,5]", "0", "1", "", ""},
    {"f1[3,4]", "e2[3,6]", "0", "1", "", ""},
    {"f1[3,4]", "e2[4,1]", "0", "1", "", ""},
    {"f1[3,4]", "e2[4,2]", "0", "1", "", ""},
    {"f1[3,4]", "e2[4,3]", "0", "1", "", ""},
    {"f1[3,4]", "e2[4,4]", "0", "1", "", ""},
    {"f1[3,4]", "e2[4,5]", "0", "1", "", ""},
    {"f1[3,4]", "e2[4,6]", "0", "1", "", ""},
    {"f1[3,4]", "e2[5,1]", "0", "1", "", ""},
    {"f1[3,4]", "e2[5,2]", "0", "1", "", ""},
    {"f1[3,4]", "e2[5,3]", "0", "1", "", ""},
    {"f1[3,4]", "e2[5,4]", "0", "1", "", ""},
    {"f1[3,4]", "e2[5,5]", "0", "1", "", ""},
    {"f1[3,4]", "e2[5,6]", "0", "1", "", ""},
    {"f1[4,1]", "e2[2,1]", "0", "1", "", ""},
    {"f1[4,1]", "e2[2,2]", "0", "1", "", ""},
    {"f1[4,1]", "e2[2,3]", "0", "1", "", ""},
    {"f1[4,1]", "e2[2,4]", "0", "1", "", ""},
    {"f1[4,1]", "e2[2,5]", "0", "1", "", ""},
    {"f1[4,1]", "e2[2,6]", "0", "1", "", ""},
    {"f1[4,1]", "e2[3,1]", "0", "1", "", ""},
    {"f1[4,1]", "e2[3,2]", "0", "1", "", ""},
    {"f1[4,1]", "e2[3,3]", "0", "1", "", ""},
    {"f1[4,1]", "e2[3,4]", "0", "1", "", ""},
    {"f1[4,1]", "e2[3,5]", "0", "1", "", ""},
    {"f1[4,1]", "e2[3,6]", "0", "1", "", ""},
    {"f1[4,1]", "e2[4,1]", "0", "1", "", ""},
    {"f1[4,1]", "e2[4,2]", "0", "1", "", ""},
    {"f1[4,1]", "e2[4,3]", "0", "1", "", ""},
    {"f1[4,1]", "e2[4,4]", "0", "1", "", ""},
    {"f1[4,1]", "e2[4,5]", "0", "1", "", ""},
    {"f1[4,1]", "e2[4,6]", "0", "1", "", ""},
    {"f1[4,1]", "e2[5,1]", "0", "1", "", ""},
    {"f1[4,1]", "e2[5,2]", "0", "1", "", ""},
    {"f1[4,1]", "e2[5,3]", "0", "1", "", ""},
    {"f1[4,1]", "e2[5,4]", "0", "1", "", ""},
    {"f1[4,1]", "e2[5,5]", "0", "1", "", ""},
    {"f1[4,1]", "e2[5,6]", "0", "1", "", ""},
    {"f1[4,1]", "e2[6,1]", "0", "1", "", ""},
    {"f1[4,1]", "e2[6,2]", "0", "1", "", ""},
    {"f1[4,1]", "e2[6,3]", "0", "1", "", ""},
    {"f1[4,1]", "e2[6,4]", "0", "1", "", ""},
    {"f1[4,1]", "e2[6,5]", "0", "1", "", ""},
    {"f1[4,1]", "e2[6,6]", "0", "1", "", ""},
    {"f1[4,2]", "e2[1,1]", "0", "1", "", ""},
    {"f1[4,2]", "e2[1,2]", "0", "1", "", ""},
    {"f1[4,2]", "e2[1,3]", "0", "1", "", ""},
    {"f1[4,2]", "e2[1,4]", "0", "1", "", ""},
    {"f1[4,2]", "e2[1,5]", "0", "1", "", ""},
    {"f1[4,2]", "e2[1,6]", "0", "1", "", ""},
    {"f1[4,2]", "e2[3,1]", "0", "1", "", ""},
    {"f1[4,2]", "e2[3,2]", "0", "1", "", ""},
    {"f1[4,2]", "e2[3,3]", "0", "1", "", ""},
    {"f1[4,2]", "e2[3,4]", "0", "1", "", ""},
    {"f1[4,2]", "e2[3,5]", "0", "1", "", ""},
    {"f1[4,2]", "e2[3,6]", "0", "1", "", ""},
    {"f1[4,2]", "e2[4,1]", "0", "1", "", ""},
    {"f1[4,2]", "e2[4,2]", "0", "1", "", ""},
    {"f1[4,2]", "e2[4,3]", "0", "1", "", ""},
    {"f1[4,2]", "e2[4,4]", "0", "1", "", ""},
    {"f1[4,2]", "e2[4,5]", "0", "1", "", ""},
    {"f1[4,2]", "e2[4,6]", "0", "1", "", ""},
    {"f1[4,2]", "e2[5,1]", "0", "1", "", ""},
    {"f1[4,2]", "e2[5,2]", "0", "1", "", ""},
    {"f1[4,2]", "e2[5,3]", "0", "1", "", ""},
    {"f1[4,2]", "e2[5,4]", "0", "1", "", ""},
    {"f1[4,2]", "e2[5,5]", "0", "1", "", ""},
    {"f1[4,2]", "e2[5,6]", "0", "1", "", ""},
    {"f1[4,2]", "e2[6,1]", "0", "1", "", ""},
    {"f1[4,2]", "e2[6,2]", "0", "1", "", ""},
    {"f1[4,2]", "e2[6,3]", "0", "1", "", ""},
    {"f1[4,2]", "e2[6,4]", "0", "1", "", ""},
    {"f1[4,2]", "e2[6,5]", "0", "1", "", ""},
    {"f1[4,2]", "e2[6,6]", "0", "1", "", ""},
    {"f1[4,3]", "e2[1,1]", "0", "1", "", ""},
    {"f1[4,3]", "e2[1,2]", "0", "1", "", ""},
    {"f1[4,3]", "e2[1,3]", "0", "1", "", ""},
    {"f1[4,3]", "e2[1,4]", "0", "1", "", ""},
    {"f1[4,3]", "e2[1,5]", "0", "1", "", ""},
    {"f1[4,3]", "e2[1,6]", "0", "1", "", ""},
    {"f1[4,3]", "e2[2,1]", "0", "1", "", ""},
    {"f1[4,3]", "e2[2,2]", "0", "1", "", ""},
    {"f1[4,3]", "e2[2,3]", "0", "1", "", ""},
    {"f1[4,3]", "e2[2,4]", "0", "1", "", ""},
    {"f1[4,3]", "e2[2,5]", "0", "1", "", ""},
    {"f1[4,3]", "e2[2,6]", "0", "1", "", ""},
    {"f1[4,3]", "e2[3,1]", "0", "1", "", ""},
    {"f1[4,3]", "e2[3,2]", "0", "1", "", ""},
    {"f1[4,3]", "e2[3,3]", "0", "1", "", ""},
    {"f1[4,3]", "e2[3,4]", "0", "1", "", ""},
    {"f1[4,3]", "e2[3,5]", "0", "1", "", ""},
    {"f1[4,3]", "e2[3,6]", "0", "1", "", ""},
    {"f1[4,3]", "e2[5,1]", "0", "1", "", ""},
    {"f1[4,3]", "e2[5,2]", "0", "1", "", ""},
    {"f1[4,3]", "e2[5,3]", "0", "1", "", ""},
    {"f1[4,3]", "e2[5,4]", "0", "1", "", ""},
    {"f1[4,3]", "e2[5,5]", "0", "1", "", ""},
    {"f1[4,3]", "e2[5,6]", "0", "1", "", ""},
    {"f1[4,3]", "e2[6,1]", "0", "1", "", ""},
    {"f1[4,3]", "e2[6,2]", "0", "1", "", ""},
    {"f1[4,3]", "e2[6,3]", "0", "1", "", ""},
    {"f1[4,3]", "e2[6,4]", "0", "1", "", ""},
    {"f1[4,3]", "e2[6,5]", "0", "1", "", ""},
    {"f1[4,3]", "e2[6,6]", "0", "1", "", ""},
    {"f1[4,4]", "e2[1,1]", "0", "1", "", ""},
    {"f1[4,4]", "e2[1,2]", "0", "1", "", ""},
    {"f1[4,4]", "e2[1,3]", "0", "1", "", ""},
    {"f1[4,4]", "e2[1,4]", "0", "1", "", ""},
    {"f1[4,4]", "e2[1,5]", "0", "1", "", ""},
    {"f1[4,4]", "e2[1,6]", "0", "1", "", ""},
    {"f1[4,4]", "e2[2,1]", "0", "1", "", ""},
    {"f1[4,4]", "e2[2,2]", "0", "1", "", ""},
    {"f1[4,4]", "e2[2,3]", "0", "1", "", ""},
    {"f1[4,4]", "e2[2,4]", "0", "1", "", ""},
    {"f1[4,4]", "e2[2,5]", "0", "1", "", ""},
    {"f1[4,4]", "e2[2,6]", "0", "1", "", ""},
    {"f1[4,4]", "e2[3,1]", "0", "1", "", ""},
    {"f1[4,4]", "e2[3,2]", "0", "1", "", ""},
    {"f1[4,4]", "e2[3,3]", "0", "1", "", ""},
    {"f1[4,4]", "e2[3,4]", "0", "1", "", ""},
    {"f1[4,4]", "e2[3,5]", "0", "1", "", ""},
    {"f1[4,4]", "e2[3,6]", "0", "1", "", ""},
    {"f1[4,4]", "e2[4,1]", "0", "1", "", ""},
    {"f1[4,4]", "e2[4,2]", "0", "1", "", ""},
    {"f1[4,4]", "e2[4,3]", "0", "1", "", ""},
    {"f1[4,4]", "e2[4,4]", "0", "1", "", ""},
    {"f1[4,4]", "e2[4,5]", "0", "1", "", ""},
    {"f1[4,4]", "e2[4,6]", "0", "1", "", ""},
    {"f1[4,4]", "e2[5,1]", "0", "1", "", ""},
    {"f1[4,4]", "e2[5,2]", "0", "1", "", ""},
    {"f1[4,4]", "e2[5,3]", "0", "1", "", ""},
    {"f1[4,4]", "e2[5,4]", "0", "1", "", ""},
    {"f1[4,4]", "e2[5,5]", "0", "1", "", ""},
    {"f1[4,4]", "e2[5,6]", "0", "1", "", ""},
    {"f2[1,1]", "e2[2,1]", "1", "1", "f2[1,1]", "e2[4,1]"},
    {"f2[1,1]", "e2[4,1]", "1", "1", "f2[1,1]", "e2[5,1]"},
    {"f2[1,1]", "e2[5,1]", "1", "1", "f2[1,2]", "e2[1,1]"},
    {"f2[1,2]", "e2[1,1]", "1", "1", "f2[1,2]", "e2[3,1]"},
    {"f2[1,2]", "e2[3,1]", "1", "1", "f2[1,2]", "e2[4,1]"},
    {"f2[1,2]", "e2[4,1]", "1", "1", "f2[1,3]", "e2[1,1]"},
    {"f2[1,3]", "e2[1,1]", "1", "1", "f2[1,3]", "e2[6,1]"},
    {"f2[1,3]", "e2[6,1]", "1", "lambda", "f2[1,3]", "e2[5,1]"},
    {"f2[1,1]", "e2[2,2]", "1", "1", "f2[1,1]", "e2[4,2]"},
    {"f2[1,1]", "e2[4,2]", "1", "1", "f2[1,1]", "e2[5,2]"},
    {"f2[1,1]", "e2[5,2]", "1", "1", "f2[1,2]", "e2[1,2]"},
    {"f2[1,2]", "e2[1,2]", "1", "1", "f2[1,2]", "e2[3,2]"},
    {"f2[1,2]", "e2[3,2]", "1", "1", "f2[1,2]", "e2[4,2]"},
    {"f2[1,2]", "e2[4,2]", "1", "1", "f2[1,3]", "e2[1,2]"},
    {"f2[1,3]", "e2[1,2]", "1", "1", "f2[1,3]", "e2[6,2]"},
    {"f2[1,3]", "e2[6,2]", "1", "lambda", "f2[1,3]", "e2[5,2]"},
    {"f2[1,1]", "e2[2,3]", "1", "1", "f2[1,1]", "e2[4,3]"},
    {"f2[1,1]", "e2[4,3]", "1", "1", "f2[1,1]", "e2[5,3]"},
    {"f2[1,1]", "e2[5,3]", "1", "1", "f2[1,2]", "e2[1,3]"},
    {"f2[1,2]", "e2[1,3]", "1", "1", "f2[1,2]", "e2[3,3]"},
    {"f2[1,2]", "e2[3,3]", "1", "1", "f2[1,2]", "e2[4,3]"},
    {"f2[1,2]", "e2[4,3]", "1", "1", "f2[1,3]", "e2[1,3]"},
    {"f2[1,3]", "e2[1,3]", "1", "1", "f2[1,3]", "e2[6,3]"},
    {"f2[1,3]", "e2[6,3]", "1", "lambda", "f2[1,3]", "e2[5,3]"},
    {"f2[1,1]", "e2[2,4]", "1", "1", "f2[1,1]", "e2[4,4]"},
    {"f2[1,1]", "e2[4,4]", "1", "1", "f2[1,1]", "e2[5,4]"},
    {"f2[1,1]", "e2[5,4]", "1", "1", "f2[1,2]", "e2[1,4]"},
    {"f2[1,2]", "e2[1,4]", "1", "1", "f2[1,2]", "e2[3,4]"},
    {"f2[1,2]", "e2[3,4]", "1", "1", "f2[1,2]", "e2[4,4]"},
    {"f2[1,2]", "e2[4,4]", "1", "1", "f2[1,3]", "e2[1,4]"},
    {"f2[1,3]", "e2[1,4]", "1", "1", "f2[1,3]", "e2[6,4]"},
    {"f2[1,3]", "e2[6,4]", "1", "lambda", "f2[1,3]", "e2[5,4]"},
    {"f2[1,1]", "e2[2,5]", "1", "1", "f2[1,1]", "e2[4,5]"},
    {"f2[1,1]", "e2[4,5]", "1", "1", "f2[1,1]", "e2[5,5]"},
    {"f2[1,1]", "e2[5,5]", "1", "1", "f2[1,2]", "e2[1,5]"},
    {"f2[1,2]", "e2[1,5]", "1", "1", "f2[1,2]", "e2[3,5]"},
    {"f2[1,2]", "e2[3,5]", "1", "1", "f2[1,2]", "e2[4,5]"},
    {"f2[1,2]", "e2[4,5]", "1", "1", "f2[1,3]", "e2[1,5]"},
    {"f2[1,3]", "e2[1,5]", "1", "1", "f2[1,3]", "e2[6,5]"},
    {"f2[1,3]", "e2[6,5]", "1", "lambda", "f2[1,3]", "e2[5,5]"},
    {"f2[1,1]", "e2[2,6]", "1", "1", "f2[1,1]", "e2[4,6]"},
    {"f2[1,1]", "e2[4,6]", "1", "1", "f2[1,1]", "e2[5,6]"},
    {"f2[1,1]", "e2[5,6]", "1", "1", "f2[1,2]", "e2[1,6]"},
    {"f2[1,2]", "e2[1,6]", "1", "1", "f2[1,2]", "e2[3,6]"},
    {"f2[1,2]", "e2[3,6]", "1", "1", "f2[1,2]", "e2[4,6]"},
    {"f2[1,2]", "e2[4,6]", "1", "1", "f2[1,3]", "e2[1,6]"},
    {"f2[1,3]", "e2[1,6]", "1", "1", "f2[1,3]", "e2[6,6]"},
    {"f2[1,3]", "e2[6,6]", "1", "lambda", "f2[1,3]", "e2[5,6]"},
    {"f2[2,1]", "e2[2,1]", "1", "1", "f2[2,1]", "e2[4,1]"},
    {"f2[2,1]", "e2[4,1]", "1", "1", "f2[2,1]", "e2[5,1]"},
    {"f2[2,1]", "e2[5,1]", "1", "1", "f2[2,2]", "e2[1,1]"},
    {"f2[2,2]", "e2[1,1]", "1", "1", "f2[2,2]", "e2[3,1]"},
    {"f2[2,2]", "e2[3,1]", "1", "1", "f2[2,2]", "e2[4,1]"},
    {"f2[2,2]", "e2[4,1]", "1", "1", "f2[2,3]", "e2[1,1]"},
    {"f2[2,3]", "e2[1,1]", "1", "1", "f2[2,3]", "e2[6,1]"},
    {"f2[2,3]", "e2[6,1]", "1", "lambda", "f2[2,3]", "e2[5,1]"},
    {"f2[2,1]", "e2[2,2]", "1", "1", "f2[2,1]", "e2[4,2]"},
    {"f2[2,1]", "e2[4,2]", "1", "1", "f2[2,1]", "e2[5,2]"},
    {"f2[2,1]", "e2[5,2]", "1", "1", "f2[2,2]", "e2[1,2]"},
    {"f2[2,2]", "e2[1,2]", "1", "1", "f2[2,2]", "e2[3,2]"},
    {"f2[2,2]", "e2[3,2]", "1", "1", "f2[2,2]", "e2[4,2]"},
    {"f2[2,2]", "e2[4,2]", "1", "1", "f2[2,3]", "e2[1,2]"},
    {"f2[2,3]", "e2[1,2]", "1", "1", "f2[2,3]", "e2[6,2]"},
    {"f2[2,3]", "e2[6,2]", "1", "lambda", "f2[2,3]", "e2[5,2]"},
    {"f2[2,1]", "e2[2,3]", "1", "1", "f2[2,1]", "e2[4,3]"},
    {"f2[2,1]", "e2[4,3]", "1", "1", "f2[2,1]", "e2[5,3]"},
    {"f2[2,1]", "e2[5,3]", "1", "1", "f2[2,2]", "e2[1,3]"},
    {"f2[2,2]", "e2[1,3]", "1", "1", "f2[2,2]", "e2[3,3]"},
    {"f2[2,2]", "e2[3,3]", "1", "1", "f2[2,2]", "e2[4,3]"},
    {"f2[2,2]", "e2[4,3]", "1", "1", "f2[2,3]", "e2[1,3]"},
    {"f2[2,3]", "e2[1,3]", "1", "1", "f2[2,3]", "e2[6,3]"},
    {"f2[2,3]", "e2[6,3]", "1", "lambda", "f2[2,3]", "e2[5,3]"},
    {"f2[2,1]", "e2[2,4]", "1", "1", "f2[2,1]", "e2[4,4]"},
    {"f2[2,1]", "e2[4,4]", "1", "1", "f2[2,1]", "e2[5,4]"},
    {"f2[2,1]", "e2[5,4]", "1", "1", "f2[2,2]", "e2[1,4]"},
    {"f2[2,2]", "e2[1,4]", "1", "1", "f2[2,2]", "e2[3,4]"},
    {"f2[2,2]", "e2[3,4]", "1", "1", "f2[2,2]", "e2[4,4]"},
    {"f2[2,2]", "e2[4,4]", "1", "1", "f2[2,3]", "e2[1,4]"},
    {"f2[2,3]", "e2[1,4]", "1", "1", "f2[2,3]", "e2[6,4]"},
    {"f2[2,3]", "e2[6,4]", "1", "lambda", "f2[2,3]", "e2[5,4]"},
    {"f2[2,1]", "e2[2,5]", "1", "1", "f2[2,1]", "e2[4,5]"},
    {"f2[2,1]", "e2[4,5]", "1", "1", "f2[2,1]", "e2[5,5]"},
    {"f2[2,1]", "e2[5,5]", "1", "1", "f2[2,2]", "e2[1,5]"},
    {"f2[2,2]", "e2[1,5]", "1", "1", "f2[2,2]", "e2[3,5]"},
    {"f2[2,2]", "e2[3,5]", "1", "1", "f2[2,2]", "e2[4,5]"},
    {"f2[2,2]", "e2[4,5]", "1", "1", "f2[2,3]", "e2[1,5]"},
    {"f2[2,3]", "e2[1,5]", "1", "1", "f2[2,3]", "e2[6,5]"},
    {"f2[2,3]", "e2[6,5]", "1", "lambda", "f2[2,3]", "e2[5,5]"},
    {"f2[2,1]", "e2[2,6]", "1", "1", "f2[2,1]", "e2[4,6]"},
    {"f2[2,1]", "e2[4,6]", "1", "1", "f2[2,1]", "e2[5,6]"},
    {"f2[2,1]", "e2[5,6]", "1", "1", "f2[2,2]", "e2[1,6]"},
    {"f2[2,2]", "e2[1,6]", "1", "1", "f2[2,2]", "e2[3,6]"},
    {"f2[2,2]", "e2[3,6]", "1", "1", "f2[2,2]", "e2[4,6]"},
    {"f2[2,2]", "e2[4,6]", "1", "1", "f2[2,3]", "e2[1,6]"},
    {"f2[2,3]", "e2[1,6]", "1", "1", "f2[2,3]", "e2[6,6]"},
    {"f2[2,3]", "e2[6,6]", "1", "lambda", "f2[2,3]", "e2[5,6]"},
    {"f2[3,1]", "e2[2,1]", "1", "1", "f2[3,1]", "e2[4,1]"},
    {"f2[3,1]", "e2[4,1]", "1", "1", "f2[3,1]", "e2[5,1]"},
    {"f2[3,1]", "e2[5,1]", "1", "1", "f2[3,2]", "e2[1,1]"},
    {"f2[3,2]", "e2[1,1]", "1", "1", "f2[3,2]", "e2[3,1]"},
    {"f2[3,2]", "e2[3,1]", "1", "1", "f2[3,2]", "e2[4,1]"},
    {"f2[3,2]", "e2[4,1]", "1", "1", "f2[3,3]", "e2[1,1]"},
    {"f2[3,3]", "e2[1,1]", "1", "1", "f2[3,3]", "e2[6,1]"},
    {"f2[3,3]", "e2[6,1]", "1", "lambda", "f2[3,3]", "e2[5,1]"},
    {"f2[3,1]", "e2[2,2]", "1", "1", "f2[3,1]", "e2[4,2]"},
    {"f2[3,1]", "e2[4,2]", "1", "1", "f2[3,1]", "e2[5,2]"},
    {"f2[3,1]", "e2[5,2]", "1", "1", "f2[3,2]", "e2[1,2]"},
    {"f2[3,2]", "e2[1,2]", "1", "1", "f2[3,2]", "e2[3,2]"},
    {"f2[3,2]", "e2[3,2]", "1", "1", "f2[3,2]", "e2[4,2]"},
    {"f2[3,2]", "e2[4,2]", "1", "1", "f2[3,3]", "e2[1,2]"},
    {"f2[3,3]", "e2[1,2]", "1", "1", "f2[3,3]", "e2[6,2]"},
    {"f2[3,3]", "e2[6,2]", "1", "lambda", "f2[3,3]", "e2[5,2]"},
    {"f2[3,1]", "e2[2,3]", "1", "1", "f2[3,1]", "e2[4,3]"},
    {"f2[3,1]", "e2[4,3]", "1", "1", "f2[3,1]", "e2[5,3]"},
    {"f2[3,1]", "e2[5,3]", "1", "1", "f2[3,2]", "e2[1,3]"},
    {"f2[3,2]", "e2[1,3]", "1", "1", "f2[3,2]", "e2[3,3]"},
    {"f2[3,2]", "e2[3,3]", "1", "1", "f2[3,2]", "e2[4,3]"},
    {"f2[3,2]", "e2[4,3]", "1", "1", "f2[3,3]", "e2[1,3]"},
    {"f2[3,3]", "e2[1,3]", "1", "1", "f2[3,3]", "e2[6,3]"},
    {"f2[3,3]", "e2[6,3]", "1", "lambda", "f2[3,3]", "e2[5,3]"},
    {"f2[3,1]", "e2[2,4]", "1", "1", "f2[3,1]", "e2[4,4]"},
    {"f2[3,1]", "e2[4,4]", "1", "1", "f2[3,1]", "e2[5,4]"},
    {"f2[3,1]", "e2[5,4]", "1", "1", "f2[3,2]", "e2[1,4]"},
    {"f2[3,2]", "e2[1,4]", "1", "1", "f2[3,2]", "e2[3,4]"},
    {"f2[3,2]", "e2[3,4]", "1", "1", "f2[3,2]", "e2[4,4]"},
    {"f2[3,2]", "e2[4,4]", "1", "1", "f2[3,3]", "e2[1,4]"},
    {"f2[3,3]", "e2[1,4]", "1", "1", "f2[3,3]", "e2[6,4]"},
    {"f2[3,3]", "e2[6,4]", "1", "lambda", "f2[3,3]", "e2[5,4]"},
    {"f2[3,1]", "e2[2,5]", "1", "1", "f2[3,1]", "e2[4,5]"},
    {"f2[3,1]", "e2[4,5]", "1", "1", "f2[3,1]", "e2[5,5]"},
    {"f2[3,1]", "e2[5,5]", "1", "1", "f2[3,2]", "e2[1,5]"},
    {"f2[3,2]", "e2[1,5]", "1", "1", "f2[3,2]", "e2[3,5]"},
    {"f2[3,2]", "e2[3,5]", "1", "1", "f2[3,2]", "e2[4,5]"},
    {"f2[3,2]", "e2[4,5]", "1", "1", "f2[3,3]", "e2[1,5]"},
    {"f2[3,3]", "e2[1,5]", "1", "1", "f2[3,3]", "e2[6,5]"},
    {"f2[3,3]", "e2[6,5]", "1", "lambda", "f2[3,3]", "e2[5,5]"},
    {"f2[3,1]", "e2[2,6]", "1", "1", "f2[3,1]", "e2[4,6]"},
    {"f2[3,1]", "e2[4,6]", "1", "1", "f2[3,1]", "e2[5,6]"},
    {"f2[3,1]", "e2[5,6]", "1", "1", "f2[3,2]", "e2[1,6]"},
    {"f2[3,2]", "e2[1,6]", "1", "1", "f2[3,2]", "e2[3,6]"},
    {"f2[3,2]", "e2[3,6]", "1", "1", "f2[3,2]", "e2[4,6]"},
    {"f2[3,2]", "e2[4,6]", "1", "1", "f2[3,3]", "e2[1,6]"},
    {"f2[3,3]", "e2[1,6]", "1", "1", "f2[3,3]", "e2[6,6]"},
    {"f2[3,3]", "e2[6,6]", "1", "lambda", "f2[3,3]", "e2[5,6]"},
    {"f2[1,1]", "e2[1,1]", "0", "1", "", ""},
    {"f2[1,1]", "e2[1,2]", "0", "1", "", ""},
    {"f2[1,1]", "e2[1,3]", "0", "1", "", ""},
    {"f2[1,1]", "e2[1,4]", "0", "1", "", ""},
    {"f2[1,1]", "e2[1,5]", "0", "1", "", ""},
    {"f2[1,1]", "e2[1,6]", "0", "1", "", ""},
    {"f2[1,1]", "e2[3,1]", "0", "1", "", ""},
    {"f2[1,1]", "e2[3,2]", "0", "1", "", ""},
    {"f2[1,1]", "e2[3,3]", "0", "1", "", ""},
    {"f2[1,1]", "e2[3,4]", "0", "1", "", ""},
    {"f2[1,1]", "e2[3,5]", "0", "1", "", ""},
    {"f2[1,1]", "e2[3,6]", "0", "1", "", ""},
    {"f2[1,1]", "e2[6,1]", "0", "1", "", ""},
    {"f2[1,1]", "e2[6,2]", "0", "1", "", ""},
    {"f2[1,1]", "e2[6,3]", "0", "1", "", ""},
    {"f2[1,1]", "e2[6,4]", "0", "1", "", ""},
    {"f2[1,1]", "e2[6,5]", "0", "1", "", ""},
    {"f2[1,1]", "e2[6,6]", "0", "1", "", ""},
    {"f2[1,2]", "e2[2,1]", "0", "1", "", ""},
    {"f2[1,2]", "e2[2,2]", "0", "1", "", ""},
    {"f2[1,2]", "e2[2,3]", "0", "1", "", ""},
    {"f2[1,2]", "e2[2,4]", "0", "1", "", ""},
    {"f2[1,2]", "e2[2,5]", "0", "1", "", ""},
    {"f2[1,2]", "e2[2,6]", "0", "1", "", ""},
    {"f2[1,2]", "e2[5,1]", "0", "1", "", ""},
    {"f2[1,2]", "e2[5,2]", "0", "1", "", ""},
    {"f2[1,2]", "e2[5,3]", "0", "1", "", ""},
    {"f2[1,2]", "e2[5,4]", "0", "1", "", ""},
    {"f2[1,2]", "e2[5,5]", "0", "1", "", ""},
    {"f2[1,2]", "e2[5,6]", "0", "1", "", ""},
    {"f2[1,2]", "e2[6,1]", "0", "1", "", ""},
    {"f2[1,2]", "e2[6,2]", "0", "1", "", ""},
    {"f2[1,2]", "e2[6,3]", "0", "1", "", ""},
    {"f2[1,2]", "e2[6,4]", "0", "1", "", ""},
    {"f2[1,2]", "e2[6,5]", "0", "1", "", ""},
    {"f2[1,2]", "e2[6,6]", "0", "1", "", ""},
    {"f2[1,3]", "e2[2,1]", "0", "1", "", ""},
    {"f2[1,3]", "e2[2,2]", "0", "1", "", ""},
    {"f2[1,3]", "e2[2,3]", "0", "1", "", ""},
    {"f2[1,3]", "e2[2,4]", "0", "1", "", ""},
    {"f2[1,3]", "e2[2,5]", "0", "1", "", ""},
    {"f2[1,3]", "e2[2,6]", "0", "1", "", ""},
    {"f2[1,3]", "e2[3,1]", "0", "1", "", ""},
    {"f2[1,3]", "e2[3,2]", "0", "1", "", ""},
    {"f2[1,3]", "e2[3,3]", "0", "1", "", ""},
    {"f2[1,3]", "e2[3,4]", "0", "1", "", ""},
    {"f2[1,3]", "e2[3,5]", "0", "1", "", ""},
    {"f2[1,3]", "e2[3,6]", "0", "1", "", ""},
    {"f2[1,3]", "e2[4,1]", "0", "1", "", ""},
    {"f2[1,3]", "e2[4,2]", "0", "1", "", ""},
    {"f2[1,3]", "e2[4,3]", "0", "1", "", ""},
    {"f2[1,3]", "e2[4,4]", "0", "1", "", ""},
    {"f2[1,3]", "e2[4,5]", "0", "1", "", ""},
    {"f2[1,3]", "e2[4,6]", "0", "1", "", ""},
    {"f2[2,1]", "e2[1,1]", "0", "1", "", ""},
    {"f2[2,1]", "e2[1,2]", "0", "1", "", ""},
    {"f2[2,1]", "e2[1,3]", "0", "1", "", ""},
    {"f2[2,1]", "e2[1,4]", "0", "1", "", ""},
    {"f2[2,1]", "e2[1,5]", "0", "1", "", ""},
    {"f2[2,1]", "e2[1,6]", "0", "1", "", ""},
    {"f2[2,1]", "e2[3,1]", "0", "1", "", ""},
    {"f2[2,1]", "e2[3,2]", "0", "1", "", ""},
    {"f2[2,1]", "e2[3,3]", "0", "1", "", ""},
    {"f2[2,1]", "e2[3,4]", "0", "1", "", ""},
    {"f2[2,1]", "e2[3,5]", "0", "1", "", ""},
    {"f2[2,1]", "e2[3,6]", "0", "1", "", ""},
    {"f2[2,1]", "e2[6,1]", "0", "1", "", ""},
    {"f2[2,1]", "e2[6,2]", "0", "1", "", ""},
    {"f2[2,1]", "e2[6,3]", "0", "1", "", ""},
    {"f2[2,1]", "e2[6,4]", "0", "1", "", ""},
    {"f2[2,1]", "e2[6,5]", "0", "1", "", ""},
    {"f2[2,1]", "e2[6,6]", "0", "1", "", ""},
    {"f2[2,2]", "e2[2,1]", "0", "1", "", ""},
    {"f2[2,2]", "e2[2,2]", "0", "1", "", ""},
    {"f2[2,2]", "e2[2,3]", "0", "1", "", ""},
    {"f2[2,2]", "e2[2,4]", "0", "1", "", ""},
    {"f2[2,2]", "e2[2,5]", "0", "1", "", ""},
    {"f2[2,2]", "e2[2,6]", "0", "1", "", ""},
    {"f2[2,2]", "e2[5,1]", "0", "1", "", ""},
    {"f2[2,2]", "e2[5,2]", "0", "1", "", ""},
    {"f2[2,2]", "e2[5,3]", "0", "1", "", ""},
    {"f2[2,2]", "e2[5,4]", "0", "1", "", ""},
    {"f2[2,2]", "e2[5,5]", "0", "1", "", ""},
    {"f2[2,2]", "e2[5,6]", "0", "1", "", ""},
    {"f2[2,2]", "e2[6,1]", "0", "1", "", ""},
    {"f2[2,2]", "e2[6,2]", "0", "1", "", ""},
    {"f2[2,2]", "e2[6,3]", "0", "1", "", ""},
    {"f2[2,2]", "e2[6,4]", "0", "1", "", ""},
    {"f2[2,2]", "e2[6,5]", "0", "1", "", ""},
    {"f2[2,2]", "e2[6,6]", "0", "1", "", ""},
    {"f2[2,3]", "e2[2,1]", "0", "1", "", ""},
    {"f2[2,3]", "e2[2,2]", "0", "1", "", ""},
    {"f2[2,3]", "e2[2,3]", "0", "1", "", ""},
    {"f2[2,3]", "e2[2,4]", "0", "1", "", ""},
    {"f2[2,3]", "e2[2,5]", "0", "1", "", ""},
    {"f2[2,3]", "e2[2,6]", "0", "1", "", ""},
    {"f2[2,3]", "e2[3,1]", "0", "1", "", ""},
    {"f2[2,3]", "e2[3,2]", "0", "1", "", ""},
    {"f2[2,3]", "e2[3,3]", "0", "1", "", ""},
    {"f2[2,3]", "e2[3,4]", "0", "1", "", ""},
    {"f2[2,3]", "e2[3,5]", "0", "1", "", ""},
    {"f2[2,3]", "e2[3,6]", "0", "1", "", ""},
    {"f2[2,3]", "e2[4,1]", "0", "1", "", ""},
    {"f2[2,3]", "e2[4,2]", "0", "1", "", ""},
    {"f2[2,3]", "e2[4,3]", "0", "1", "", ""},
    {"f2[2,3]", "e2[4,4]", "0", "1", "", ""},
    {"f2[2,3]", "e2[4,5]", "0", "1", "", ""},
    {"f2[2,3]", "e2[4,6]", "0", "1", "", ""},
    {"f2[3,1]", "e2[1,1]", "0", "1", "", ""},
    {"f2[3,1]", "e2[1,2]", "0", "1", "", ""},
    {"f2[3,1]", "e2[1,3]", "0", "1", "", ""},
    {"f2[3,1]", "e2[1,4]", "0", "1", "", ""},
    {"f2[3,1]", "e2[1,5]", "0", "1", "", ""},
    {"f2[3,1]", "e2[1,6]", "0", "1", "", ""},
    {"f2[3,1]", "e2[3,1]", "0", "1", "", ""},
    {"f2[3,1]", "e2[3,2]", "0", "1", "", ""},
    {"f2[3,1]", "e2[3,3]", "0", "1", "", ""},
    {"f2[3,1]", "e2[3,4]", "0", "1", "", ""},
    {"f2[3,1]", "e2[3,5]", "0", "1", "", ""},
    {"f2[3,1]", "e2[3,6]", "0", "1", "", ""},
    {"f2[3,1]", "e2[6,1]", "0", "1", "", ""},
    {"f2[3,1]", "e2[6,2]", "0", "1", "", ""},
    {"f2[3,1]", "e2[6,3]", "0", "1", "", ""},
    {"f2[3,1]", "e2[6,4]", "0", "1", "", ""},
    {"f2[3,1]", "e2[6,5]", "0", "1", "", ""},
    {"f2[3,1]", "e2[6,6]", "0", "1", "", ""},
    {"f2[3,2]", "e2[2,1]", "0", "1", "", ""},
    {"f2[3,2]", "e2[2,2]", "0", "1", "", ""},
    {"f2[3,2]", "e2[2,3]", "0", "1", "", ""},
    {"f2[3,2]", "e2[2,4]", "0", "1", "", ""},
    {"f2[3,2]", "e2[2,5]", "0", "1", "", ""},
    {"f2[3,2]", "e2[2,6]", "0", "1", "", ""},
    {"f2[3,2]", "e2[5,1]", "0", "1", "", ""},
    {"f2[3,2]", "e2[5,2]", "0", "1", "", ""},
    {"f2[3,2]", "e2[5,3]", "0", "1", "", ""},
    {"f2[3,2]", "e2[5,4]", "0", "1", "", ""},
    {"f2[3,2]", "e2[5,5]", "0", "1", "", ""},
    {"f2[3,2]", "e2[5,6]", "0", "1", "", ""},
    {"f2[3,2]", "e2[6,1]", "0", "1", "", ""},
    {"f2[3,2]", "e2[6,2]", "0", "1", "", ""},
    {"f2[3,2]", "e2[6,3]", "0", "1", "", ""},
    {"f2[3,2]", "e2[6,4]", "0", "1", "", ""},
    {"f2[3,2]", "e2[6,5]", "0", "1", "", ""},
    {"f2[3,2]", "e2[6,6]", "0", "1", "", ""},
    {"f2[3,3]", "e2[2,1]", "0", "1", "", ""},
    {"f2[3,3]", "e2[2,2]", "0", "1", "", ""},
    {"f2[3,3]", "e2[2,3]", "0", "1", "", ""},
    {"f2[3,3]", "e2[2,4]", "0", "1", "", ""},
    {"f2[3,3]", "e2[2,5]", "0", "1", "", ""},
    {"f2[3,3]", "e2[2,6]", "0", "1", "", ""},
    {"f2[3,3]", "e2[3,1]", "0", "1", "", ""},
    {"f2[3,3]", "e2[3,2]", "0", "1", "", ""},
    {"f2[3,3]", "e2[3,3]", "0", "1", "", ""},
    {"f2[3,3]", "e2[3,4]", "0", "1", "", ""},
    {"f2[3,3]", "e2[3,5]", "0", "1", "", ""},
    {"f2[3,3]", "e2[3,6]", "0", "1", "", ""},
    {"f2[3,3]", "e2[4,1]", "0", "1", "", ""},
    {"f2[3,3]", "e2[4,2]", "0", "1", "", ""},
    {"f2[3,3]", "e2[4,3]", "0", "1", "", ""},
    {"f2[3,3]", "e2[4,4]", "0", "1", "", ""},
    {"f2[3,3]", "e2[4,5]", "0", "1", "", ""},
    {"f2[3,3]", "e2[4,6]", "0", "1", "", ""},
};

const RTermRow kRTerms[] = {
    {"lambda + 1", "1", "e2[1,1]", "f1[3,3]"},
    {"lambda + 1", "1", "e3[1,1]", "f1[3,3]"},
    {"lambda + 1", "1", "e2[6,6]", "f1[3,3]"},
    {"lambda + 1", "1", "e2[3,3]", "f2[1,1]"},
    {"lambda + 1", "1", "e2[1,1]", "f3[4,4]"},
    {"lambda + 1", "1", "e4[1,1]", "f1[3,3]"},
    {"lambda + 1", "1", "e2[1,1]", "f2[1,1]"},
    {"lambda + 1", "1", "e1[1,1]", "f2[1,1]"},
    {"lambda + 1", "1", "e3[1,1]", "f2[1,1]"},
    {"lambda + 1", "1", "e2[6,6]", "f2[1,1]"},
    {"lambda + 1", "1", "e1[1,1]", "f3[4,4]"},
    {"lambda + 1", "1", "e4[1,1]", "f3[4,4]"},
    {"lambda + 1", "1", "e3[3,3]", "f2[1,1]"},
    {"lambda + 1", "1", "e4[1,1]", "f2[1,1]"},
    {"lambda + 1", "1", "e2[6,6]", "f3[4,4]"},
    {"lambda + 1", "1", "e3[1,1]", "f3[5,5]"},
    {"lambda + 1", "1", "e3[1,1]", "f3[4,4]"},
    {"lambda + 1", "1", "e2[3,3]", "f3[5,5]"},
    {"lambda + 1", "1", "e1[1,1]", "f3[5,5]"},
    {"lambda + 1", "1", "e2[1,1]", "f3[5,5]"},
    {"lambda + 1", "1", "e3[3,3]", "f3[5,5]"},
    {"lambda + 1", "1", "e4[1,1]", "f3[5,5]"},
    {"lambda + 1", "1", "e2[6,6]", "f1[2,2]"},
    {"lambda + 1", "1", "e3[3,3]", "f1[2,2]"},
    {"lambda + 1", "1", "e1[1,1]", "f1[2,2]"},
    {"lambda + 1", "1", "e2[1,1]", "f1[2,2]"},
    {"lambda + 1", "1", "e3[1,1]", "f1[2,2]"},
    {"lambda + 1", "1", "e2[3,3]", "f1[2,2]"},
    {"lambda + 1", "1", "e4[1,1]", "f1[2,2]"},
    {"lambda + 1", "1", "e2[1,1]", "f4[2,2]"},
    {"lambda + 1", "1", "e1[1,1]", "f4[2,2]"},
    {"lambda + 1", "1", "e1[1,1]", "f3[2,2]"},
    {"lambda + 1", "1", "e2[1,1]", "f3[2,2]"},
    {"lambda + 1", "1", "e2[6,6]", "f4[2,2]"},
    {"lambda + 1", "1", "e3[1,1]", "f4[2,2]"},
    {"lambda + 1", "1", "e2[3,3]", "f4[2,2]"},
    {"lambda + 1", "1", "e1[1,1]", "f1[3,3]"},
    {"lambda + 1", "1", "e3[1,1]", "f3[2,2]"},
    {"lambda + 1", "1", "e2[6,6]", "f3[2,2]"},
    {"lambda + 1", "1", "e2[3,3]", "f3[2,2]"},
    {"lambda + 1", "1", "e3[3,3]", "f4[2,2]"},
    {"lambda + 1", "1", "e4[1,1]", "f4[2,2]"},
    {"lambda + 1", "1", "e3[3,3]", "f3[2,2]"},
    {"lambda + 1", "1", "e4[1,1]", "f3[2,2]"},
    {"lambda - 1", "1", "e2[3,1]", "f4[3,3]"},
    {"-lambda + 1", "1", "e2[4,4]", "f1[2,3]"},
    {"-lambda + 1", "1", "e3[4,4]", "f1[2,3]"},
    {"lambda - 1", "1", "e3[3,4]", "f4[2,3]"},
    {"lambda - 1", "1", "e3[3,1]", "f4[3,3]"},
    {"lambda - 1", "1", "e2[1,4]", "f3[2,1]"},
    {"lambda - 1", "1", "e2[1,4]", "f4[2,1]"},
    {"-lambda + 1", "1", "e3[4,4]", "f3[2,4]"},
    {"-lambda + 1", "1", "e2[6,4]", "f1[2,4]"},
    {"-lambda + 1", "1", "e3[4,1]", "f3[3,4]"},
    {"-lambda + 1", "1", "e3[2,1]", "f3[3,2]"},
    {"lambda - 1", "1", "e2[3,1]", "f3[3,3]"},
    {"lambda - 1", "1", "e2[5,4]", "f3[2,5]"},
    {"lambda - 1", "1", "e2[5,1]", "f3[3,5]"},
    {"-lambda + 1", "1", "e4[1,1]", "f3[3,1]"},
    {"-lambda + 1", "1", "e4[2,1]", "f3[3,2]"},
    {"lambda - 1", "1", "e3[1,4]", "f4[2,1]"},
    {"-lambda + 1", "1", "e3[1,1]", "f3[3,1]"},
    {"lambda - 1", "1", "e2[3,4]", "f4[2,3]"},
    {"lambda - 1", "1", "e3[2,4]", "f4[2,2]"},
    {"lambda - 1", "1", "e2[2,4]", "f3[2,2]"},
    {"-lambda + 1", "1", "e4[1,1]", "f4[3,1]"},
    {"lambda - 1", "1", "e2[2,4]", "f4[2,2]"},
    {"lambda - 1", "1", "e2[3,4]", "f3[2,3]"},
    {"-lambda + 1", "1", "e4[2,1]", "f4[3,2]"},
    {"lambda", "1", "e1[1,1]", "f1[4,1]"},
    {"lambda", "1", "e3[4,3]", "f1[1,3]"},
    {"-lambda", "1", "e3[4,2]", "f1[1,3]"},
    {"lambda", "1", "e3[4,1]", "f1[1,3]"},
    {"-lambda", "1", "e2[4,2]", "f1[2,3]"},
    {"lambda", "1", "e2[1,1]", "f1[1,1]"},
    {"lambda", "1", "e1[1,1]", "f1[1,2]"},
    {"lambda", "1", "e3[1,3]", "f1[1,1]"},
    {"-lambda", "1", "e2[4,5]", "f1[2,3]"},
    {"-lambda", "1", "e2[1,2]", "f1[1,1]"},
    {"-lambda", "1", "e3[4,2]", "f1[2,3]"},
    {"lambda", "1", "e2[4,2]", "f1[3,3]"},
    {"-lambda", "1", "e2[1,2]", "f1[3,3]"},
    {"lambda", "1", "e2[1,3]", "f1[1,1]"},
    {"-lambda", "1", "e1[1,2]", "f1[3,3]"},
    {"-lambda", "1", "e2[6,4]", "f1[3,3]"},
    {"lambda", "1", "e2[4,4]", "f1[3,3]"},
    {"lambda", "1", "e3[3,2]", "f4[2,3]"},
    {"lambda", "1", "e2[3,3]", "f1[3,3]"},
    {"lambda", "1", "e2[3,5]", "f3[1,3]"},
    {"lambda", "1", "e2[5,5]", "f1[3,3]"},
    {"lambda", "1", "e3[4,4]", "f1[3,3]"},
    {"lambda", "1", "e3[3,3]", "f1[3,3]"},
    {"lambda", "1", "e3[4,2]", "f1[3,3]"},
    {"-lambda", "1", "e3[1,2]", "f1[3,3]"},
    {"lambda", "1", "e2[1,1]", "f1[4,3]"},
    {"lambda", "1", "e1[2,1]", "f1[4,3]"},
    {"lambda", "1", "e1[1,1]", "f1[4,3]"},
    {"-lambda", "1", "e4[1,2]", "f1[3,3]"},
    {"lambda", "1", "e2[4,2]", "f1[4,3]"},
    {"-lambda", "1", "e2[4,1]", "f1[4,3]"},
    {"lambda", "1", "e2[2,1]", "f1[4,3]"},
    {"-lambda", "1", "e1[1,2]", "f4[3,3]"},
    {"lambda", "1", "e3[1,1]", "f1[4,3]"},
    {"lambda", "1", "e2[6,6]", "f1[4,3]"},
    {"-lambda", "1", "e2[1,2]", "f4[3,3]"},
    {"lambda", "1", "e2[5,5]", "f1[4,3]"},
    {"lambda", "1", "e2[3,5]", "f1[4,3]"},
    {"lambda", "1", "e2[4,4]", "f1[4,3]"},
    {"lambda", "1", "e2[3,3]", "f4[3,3]"},
    {"lambda", "1", "e3[2,1]", "f1[4,3]"},
    {"-lambda", "1", "e2[1,5]", "f1[1,1]"},
    {"lambda", "1", "e3[4,2]", "f1[4,3]"},
    {"-lambda", "1", "e3[4,1]", "f1[4,3]"},
    {"lambda", "1", "e3[4,1]", "f3[1,4]"},
    {"lambda", "1", "e3[1,3]", "f3[1,1]"},
    {"lambda", "1", "e4[2,1]", "f1[4,3]"},
    {"-lambda", "1", "e2[3,5]", "f4[3,3]"},
    {"lambda", "1", "e4[1,1]", "f1[4,3]"},
    {"lambda", "1", "e3[4,4]", "f1[4,3]"},
    {"-lambda", "1", "e2[6,4]", "f4[3,3]"},
    {"-lambda", "1", "e2[6,2]", "f1[1,4]"},
    {"lambda", "1", "e3[4,3]", "f3[1,4]"},
    {"-lambda", "1", "e3[4,2]", "f3[1,4]"},
    {"lambda", "1", "e3[1,1]", "f1[1,1]"},
    {"lambda", "1", "e2[6,1]", "f1[1,4]"},
    {"lambda", "1", "e3[1,1]", "f3[3,5]"},
    {"lambda", "1", "e2[6,3]", "f1[1,4]"},
    {"-lambda", "1", "e3[1,2]", "f4[3,3]"},
    {"-lambda", "1", "e3[1,2]", "f1[1,1]"},
    {"-lambda", "1", "e2[6,5]", "f1[1,4]"},
    {"lambda", "1", "e3[3,3]", "f4[3,3]"},
    {"lambda", "1", "e3[1,2]", "f4[2,1]"},
    {"-lambda", "1", "e2[6,2]", "f1[2,4]"},
    {"-lambda", "1", "e2[6,5]", "f1[2,4]"},
    {"-lambda", "1", "e2[2,2]", "f3[4,2]"},
    {"lambda", "1", "e4[1,1]", "f1[1,1]"},
    {"-lambda", "1", "e4[1,2]", "f1[1,1]"},
    {"lambda", "1", "e1[1,2]", "f1[2,1]"},
    {"-lambda", "1", "e4[1,2]", "f4[3,3]"},
    {"-lambda", "1", "e3[4,2]", "f3[2,4]"},
    {"lambda", "1", "e2[6,2]", "f1[3,4]"},
    {"lambda", "1", "e2[6,4]", "f1[3,4]"},
    {"lambda", "1", "e2[1,1]", "f1[4,4]"},
    {"-lambda", "1", "e1[1,2]", "f1[4,4]"},
    {"lambda", "1", "e1[1,1]", "f1[4,4]"},
    {"-lambda", "1", "e2[2,4]", "f3[4,2]"},
    {"lambda", "1", "e2[3,3]", "f1[4,4]"},
    {"lambda", "1", "e2[6,2]", "f1[4,4]"},
    {"-lambda", "1", "e2[1,2]", "f1[4,4]"},
    {"-lambda", "1", "e2[6,1]", "f1[4,4]"},
    {"-lambda", "1", "e2[3,5]", "f1[4,4]"},
    {"-lambda", "1", "e3[1,2]", "f1[4,4]"},
    {"lambda", "1", "e3[1,1]", "f1[4,4]"},
    {"lambda", "1", "e2[3,5]", "f1[2,1]"},
    {"lambda", "1", "e4[1,1]", "f1[4,4]"},
    {"-lambda", "1", "e2[1,5]", "f1[2,1]"},
    {"lambda", "1", "e3[3,3]", "f1[4,4]"},
    {"lambda", "1", "e2[3,2]", "f3[2,3]"},
    {"-lambda", "1", "e2[1,2]", "f2[1,1]"},
    {"-lambda", "1", "e1[1,2]", "f2[1,1]"},
    {"-lambda", "1", "e4[1,2]", "f1[4,4]"},
    {"lambda", "1", "e2[5,5]", "f2[1,1]"},
    {"-lambda", "1", "e2[3,5]", "f2[1,1]"},
    {"-lambda", "1", "e2[6,4]", "f2[1,1]"},
    {"-lambda", "1", "e3[4,3]", "f3[3,4]"},
    {"-lambda", "1", "e1[1,2]", "f3[4,4]"},
    {"-lambda", "1", "e3[1,2]", "f2[1,1]"},
    {"lambda", "1", "e2[3,3]", "f3[4,4]"},
    {"lambda", "1", "e2[1,1]", "f2[2,1]"},
    {"lambda", "1", "e1[1,1]", "f2[2,1]"},
    {"-lambda", "1", "e4[1,2]", "f2[1,1]"},
    {"-lambda", "1", "e2[1,2]", "f3[4,4]"},
    {"lambda", "1", "e2[5,5]", "f3[4,4]"},
    {"lambda", "1", "e2[4,4]", "f2[2,1]"},
    {"lambda", "1", "e2[3,3]", "f2[2,1]"},
    {"-lambda", "1", "e2[6,4]", "f3[4,4]"},
    {"-lambda", "1", "e3[1,2]", "f3[4,4]"},
    {"lambda", "1", "e3[1,1]", "f2[2,1]"},
    {"lambda", "1", "e2[6,6]", "f2[2,1]"},
    {"lambda", "1", "e2[5,5]", "f2[2,1]"},
    {"lambda", "1", "e3[3,3]", "f2[2,1]"},
    {"lambda", "1", "e3[4,4]", "f3[4,4]"},
    {"lambda", "1", "e2[3,5]", "f4[1,3]"},
    {"lambda", "1", "e3[3,3]", "f3[4,4]"},
    {"lambda", "1", "e3[4,2]", "f3[4,4]"},
    {"lambda", "1", "e1[2,1]", "f2[3,1]"},
    {"-lambda", "1", "e4[1,2]", "f3[4,4]"},
    {"lambda", "1", "e1[1,1]", "f2[3,1]"},
    {"lambda", "1", "e4[1,1]", "f2[2,1]"},
    {"lambda", "1", "e3[4,4]", "f2[2,1]"},
    {"lambda", "1", "e2[5,5]", "f2[3,1]"},
    {"lambda", "1", "e2[4,4]", "f2[3,1]"},
    {"lambda", "1", "e2[3,3]", "f2[3,1]"},
    {"-lambda", "1", "e1[1,2]", "f1[3,1]"},
    {"lambda", "1", "e2[2,1]", "f2[3,1]"},
    {"lambda", "1", "e2[1,1]", "f2[3,1]"},
    {"lambda", "1", "e3[3,3]", "f2[3,1]"},
    {"lambda", "1", "e3[2,1]", "f2[3,1]"},
    {"lambda", "1", "e3[1,1]", "f2[3,1]"},
    {"lambda", "1", "e2[6,6]", "f2[3,1]"},
    {"lambda", "1", "e2[3,5]", "f3[2,3]"},
    {"lambda", "1", "e4[2,1]", "f2[3,1]"},
    {"lambda", "1", "e4[1,1]", "f2[3,1]"},
    {"lambda", "1", "e3[4,4]", "f2[3,1]"},
    {"lambda", "1", "e2[3,5]", "f2[1,2]"},
    {"-lambda", "1", "e2[1,2]", "f2[2,2]"},
    {"-lambda", "1", "e1[1,2]", "f2[2,2]"},
    {"lambda", "1", "e2[5,2]", "f3[1,5]"},
    {"-lambda", "1", "e2[6,4]", "f2[2,2]"},
    {"-lambda", "1", "e2[5,1]", "f3[1,5]"},
    {"-lambda", "1", "e2[5,3]", "f3[1,5]"},
    {"-lambda", "1", "e3[1,2]", "f2[2,2]"},
    {"-lambda", "1", "e4[1,2]", "f2[2,2]"},
    {"lambda", "1", "e2[5,5]", "f3[1,5]"},
    {"-lambda", "1", "e2[3,3]", "f2[3,2]"},
    {"lambda", "1", "e2[3,5]", "f2[3,2]"},
    {"-lambda", "1", "e3[3,3]", "f2[3,2]"},
    {"-lambda", "1", "e1[1,2]", "f1[4,1]"},
    {"lambda", "1", "e2[5,2]", "f3[2,5]"},
    {"lambda", "1", "e2[5,5]", "f3[2,5]"},
    {"-lambda", "1", "e3[3,1]", "f4[1,3]"},
    {"lambda", "1", "e2[6,4]", "f2[2,3]"},
    {"-lambda", "1", "e1[1,2]", "f3[3,3]"},
    {"lambda", "1", "e2[1,1]", "f3[3,5]"},
    {"lambda", "1", "e1[1,1]", "f3[3,5]"},
    {"lambda", "1", "e3[3,2]", "f4[1,3]"},
    {"-lambda", "1", "e2[1,2]", "f2[3,3]"},
    {"lambda", "1", "e2[4,4]", "f3[3,5]"},
    {"lambda", "1", "e2[1,1]", "f2[3,3]"},
    {"-lambda", "1", "e1[1,2]", "f2[3,3]"},
    {"lambda", "1", "e2[5,3]", "f3[3,5]"},
    {"lambda", "1", "e1[1,1]", "f2[3,3]"},
    {"lambda", "1", "e2[3,3]", "f3[3,5]"},
    {"-lambda", "1", "e2[1,2]", "f3[3,3]"},
    {"lambda", "1", "e2[3,3]", "f2[3,3]"},
    {"-lambda", "1", "e3[1,2]", "f2[3,3]"},
    {"lambda", "1", "e3[1,1]", "f2[3,3]"},
    {"-lambda", "1", "e2[3,5]", "f2[3,3]"},
    {"lambda", "1", "e3[3,3]", "f3[3,5]"},
    {"lambda", "1", "e4[1,1]", "f2[3,3]"},
    {"lambda", "1", "e3[3,3]", "f2[3,3]"},
    {"lambda", "1", "e4[1,1]", "f3[3,5]"},
    {"lambda", "1", "e3[4,4]", "f3[3,5]"},
    {"-lambda", "1", "e4[1,2]", "f2[3,3]"},
    {"lambda", "1", "e1[2,2]", "f1[1,2]"},
    {"lambda", "1", "e2[2,1]", "f1[1,2]"},
    {"lambda", "1", "e2[1,1]", "f1[1,2]"},
    {"-lambda", "1", "e2[5,2]", "f3[4,5]"},
    {"-lambda", "1", "e3[3,3]", "f4[1,3]"},
    {"-lambda", "1", "e2[5,4]", "f3[4,5]"},
    {"lambda", "1", "e3[1,1]", "f3[1,1]"},
    {"lambda", "1", "e2[3,3]", "f3[3,3]"},
    {"-lambda", "1", "e3[1,2]", "f3[1,1]"},
    {"lambda", "1", "e2[3,3]", "f1[1,2]"},
    {"lambda", "1", "e2[2,3]", "f1[1,2]"},
    {"lambda", "1", "e4[1,1]", "f3[1,1]"},
    {"-lambda", "1", "e4[1,2]", "f3[1,1]"},
    {"lambda", "1", "e1[1,2]", "f3[2,1]"},
    {"-lambda", "1", "e1[1,2]", "f3[5,5]"},
    {"lambda", "1", "e2[4,4]", "f1[1,2]"},
    {"lambda", "1", "e2[1,2]", "f3[2,1]"},
    {"-lambda", "1", "e2[2,5]", "f1[1,2]"},
    {"-lambda", "1", "e2[1,2]", "f3[5,5]"},
    {"-lambda", "1", "e2[6,4]", "f3[3,3]"},
    {"lambda", "1", "e2[5,5]", "f1[1,2]"},
    {"lambda", "1", "e2[3,5]", "f3[2,1]"},
    {"-lambda", "1", "e2[3,5]", "f3[3,3]"},
    {"-lambda", "1", "e2[3,5]", "f3[5,5]"},
    {"lambda", "1", "e2[6,6]", "f1[1,2]"},
    {"lambda", "1", "e3[1,1]", "f1[1,2]"},
    {"lambda", "1", "e3[2,1]", "f1[1,2]"},
    {"-lambda", "1", "e3[1,2]", "f3[5,5]"},
    {"lambda", "1", "e3[2,3]", "f1[1,2]"},
    {"lambda", "1", "e3[3,3]", "f1[1,2]"},
    {"-lambda", "1", "e4[1,2]", "f3[5,5]"},
    {"-lambda", "1", "e3[2,3]", "f3[3,2]"},
    {"lambda", "1", "e3[4,4]", "f1[1,2]"},
    {"lambda", "1", "e4[1,1]", "f1[1,2]"},
    {"lambda", "1", "e4[2,1]", "f1[1,2]"},
    {"-lambda", "1", "e1[1,2]", "f1[2,2]"},
    {"lambda", "1", "e1[2,2]", "f1[2,2]"},
    {"-lambda", "1", "e3[1,2]", "f3[3,3]"},
    {"-lambda", "1", "e3[1,3]", "f3[3,1]"},
    {"-lambda", "1", "e2[1,2]", "f1[2,2]"},
    {"-lambda", "1", "e1[1,2]", "f3[4,1]"},
    {"-lambda", "1", "e2[1,2]", "f3[4,1]"},
    {"-lambda", "1", "e2[6,4]", "f1[2,2]"},
    {"lambda", "1", "e4[1,1]", "f4[1,1]"},
    {"-lambda", "1", "e2[2,5]", "f1[2,2]"},
    {"-lambda", "1", "e2[1,4]", "f3[4,1]"},
    {"-lambda", "1", "e4[1,2]", "f4[1,1]"},
    {"-lambda", "1", "e2[3,5]", "f1[2,2]"},
    {"lambda", "1", "e2[5,5]", "f1[2,2]"},
    {"lambda", "1", "e1[1,2]", "f4[2,1]"},
    {"lambda", "1", "e2[1,2]", "f4[2,1]"},
    {"-lambda", "1", "e4[1,2]", "f3[3,3]"},
    {"-lambda", "1", "e3[1,2]", "f1[2,2]"},
    {"lambda", "1", "e2[3,5]", "f4[2,1]"},
    {"-lambda", "1", "e4[1,2]", "f1[2,2]"},
    {"-lambda", "1", "e1[2,2]", "f1[3,2]"},
    {"lambda", "1", "e1[1,1]", "f3[1,2]"},
    {"lambda", "1", "e2[1,1]", "f3[1,2]"},
    {"lambda", "1", "e1[2,2]", "f3[1,2]"},
    {"lambda", "1", "e1[1,1]", "f4[1,2]"},
    {"lambda", "1", "e2[1,1]", "f4[1,2]"},
    {"lambda", "1", "e1[2,2]", "f4[1,2]"},
    {"lambda", "1", "e2[2,2]", "f3[1,2]"},
    {"lambda", "1", "e2[2,2]", "f4[1,2]"},
    {"-lambda", "1", "e2[3,2]", "f3[4,3]"},
    {"lambda", "1", "e2[3,3]", "f3[1,2]"},
    {"lambda", "1", "e2[3,3]", "f4[1,2]"},
    {"lambda", "1", "e2[4,4]", "f3[1,2]"},
    {"lambda", "1", "e2[4,4]", "f4[1,2]"},
    {"lambda", "1", "e2[5,5]", "f4[1,2]"},
    {"lambda", "1", "e2[5,5]", "f3[1,2]"},
    {"lambda", "1", "e3[1,1]", "f4[1,2]"},
    {"lambda", "1", "e2[6,6]", "f4[1,2]"},
    {"lambda", "1", "e3[2,2]", "f4[1,2]"},
    {"lambda", "1", "e3[1,1]", "f3[1,2]"},
    {"lambda", "1", "e2[6,6]", "f3[1,2]"},
    {"lambda", "1", "e3[2,1]", "f3[1,2]"},
    {"lambda", "1", "e3[3,3]", "f4[1,2]"},
    {"lambda", "1", "e3[4,4]", "f4[1,2]"},
    {"lambda", "1", "e4[1,1]", "f4[1,2]"},
    {"lambda", "1", "e3[2,3]", "f3[1,2]"},
    {"lambda", "1", "e4[2,1]", "f4[1,2]"},
    {"lambda", "1", "e3[3,3]", "f3[1,2]"},
    {"lambda", "1", "e4[1,1]", "f3[1,2]"},
    {"lambda", "1", "e3[4,4]", "f3[1,2]"},
    {"lambda", "1", "e1[2,2]", "f4[2,2]"},
    {"-lambda", "1", "e1[1,2]", "f4[2,2]"},
    {"-lambda", "1", "e2[3,4]", "f3[4,3]"},
    {"lambda", "1", "e4[2,1]", "f3[1,2]"},
    {"lambda", "1", "e1[2,1]", "f1[4,2]"},
    {"-lambda", "1", "e2[1,2]", "f4[2,2]"},
    {"lambda", "1", "e2[2,2]", "f4[2,2]"},
    {"lambda", "1", "e2[3,2]", "f4[2,3]"},
    {"-lambda", "1", "e1[2,2]", "f1[4,2]"},
    {"lambda", "1", "e1[2,2]", "f3[2,2]"},
    {"-lambda", "1", "e1[1,2]", "f3[2,2]"},
    {"-lambda", "1", "e2[6,4]", "f4[2,2]"},
    {"lambda", "1", "e2[5,5]", "f4[2,2]"},
    {"-lambda", "1", "e2[3,5]", "f4[2,2]"},
    {"-lambda", "1", "e2[1,2]", "f3[2,2]"},
    {"lambda", "1", "e2[2,2]", "f3[2,2]"},
    {"-lambda", "1", "e3[1,2]", "f4[2,2]"},
    {"lambda", "1", "e3[2,2]", "f4[2,2]"},
    {"-lambda", "1", "e1[2,2]", "f3[4,2]"},
    {"-lambda", "1", "e2[6,4]", "f3[2,2]"},
    {"-lambda", "1", "e4[1,2]", "f4[2,2]"},
    {"-lambda", "1", "e2[3,1]", "f3[1,3]"},
    {"-lambda", "1", "e2[3,5]", "f3[2,2]"},
    {"lambda", "1", "e2[5,5]", "f3[2,2]"},
    {"lambda", "1", "e2[3,2]", "f3[1,3]"},
    {"-lambda", "1", "e3[1,2]", "f3[2,2]"},
    {"lambda", "1", "e2[4,1]", "f1[1,3]"},
    {"-lambda", "1", "e4[1,2]", "f3[2,2]"},
    {"-lambda", "1", "e2[3,3]", "f3[1,3]"},
    {"-lambda", "1", "e2[4,2]", "f1[1,3]"},
    {"lambda", "1", "e2[4,3]", "f1[1,3]"},
    {"lambda", "1", "e2[3,5]", "f4[2,3]"},
    {"-lambda", "1", "e2[3,1]", "f4[1,3]"},
    {"-lambda", "1", "e2[4,5]", "f1[1,3]"},
    {"lambda", "1", "e2[3,2]", "f4[1,3]"},
    {"-lambda", "1", "e2[3,3]", "f4[1,3]"},
    {"lambda^2", "1", "e2[6,4]", "f3[3,5]"},
    {"1", "1", "e1[2,1]", "f3[4,2]"},
    {"-1", "1", "e2[3,3]", "f2[1,2]"},
    {"-1", "1", "e3[3,3]", "f2[1,2]"},
    {"1", "1", "e1[1,1]", "f2[2,2]"},
    {"1", "1", "e2[4,4]", "f4[2,2]"},
    {"1", "1", "e2[1,1]", "f2[2,2]"},
    {"1", "1", "e2[6,6]", "f2[2,2]"},
    {"1", "1", "e3[1,1]", "f2[2,2]"},
    {"1", "1", "e4[1,1]", "f2[2,2]"},
    {"1", "1", "e3[4,4]", "f4[2,2]"},
    {"-1", "1", "e2[3,3]", "f4[2,3]"},
    {"1", "1", "e4[2,1]", "f4[2,2]"},
    {"1", "1", "e2[4,4]", "f3[2,2]"},
    {"1", "1", "e2[2,1]", "f3[4,2]"},
    {"1", "1", "e2[6,4]", "f2[1,3]"},
    {"-1", "1", "e2[6,6]", "f2[1,3]"},
    {"1", "1", "e3[2,1]", "f3[2,2]"},
    {"1", "1", "e2[3,6]", "f3[4,3]"},
    {"1", "1", "e3[2,3]", "f3[2,2]"},
    {"-1", "1", "e2[6,6]", "f2[2,3]"},
    {"1", "1", "e3[4,4]", "f3[2,2]"},
    {"1", "1", "e4[2,1]", "f3[2,2]"},
    {"-1", "1", "e2[3,1]", "f4[2,3]"},
    {"1", "1", "e4[2,1]", "f2[2,1]"},
    {"1", "1", "e3[2,1]", "f2[2,1]"},
    {"1", "1", "e2[4,4]", "f2[1,1]"},
    {"1", "1", "e3[2,1]", "f2[1,1]"},
    {"-1", "1", "e3[1,3]", "f3[5,1]"},
    {"1", "1", "e3[4,4]", "f2[1,1]"},
    {"1", "1", "e4[2,1]", "f2[1,1]"},
    {"1", "1", "e1[2,1]", "f2[2,1]"},
    {"1", "1", "e2[2,1]", "f2[2,1]"},
    {"-1", "1", "e3[2,3]", "f3[5,2]"},
    {"1", "1", "e2[2,1]", "f2[1,1]"},
    {"1", "1", "e1[2,1]", "f2[1,1]"},
    {"-1", "1", "e2[6,6]", "f4[2,1]"},
    {"-1", "1", "e3[1,1]", "f4[2,1]"},
    {"-1", "1", "e3[3,3]", "f4[2,1]"},
    {"1", "1", "e2[3,1]", "f3[4,3]"},
    {"1", "1", "e2[6,4]", "f4[2,1]"},
    {"-1", "1", "e2[6,6]", "f1[3,4]"},
    {"-1", "1", "e2[3,3]", "f4[2,1]"},
    {"-1", "1", "e2[1,1]", "f4[2,1]"},
    {"1", "1", "e2[1,6]", "f3[4,1]"},
    {"-1", "1", "e2[6,1]", "f1[3,4]"},
    {"-1", "1", "e1[1,1]", "f4[2,1]"},
    {"1", "1", "e2[6,1]", "f1[2,4]"},
    {"1", "1", "e4[1,1]", "f3[3,3]"},
    {"1", "1", "e2[6,3]", "f1[2,4]"},
    {"1", "1", "e2[1,1]", "f3[4,1]"},
    {"1", "1", "e1[1,1]", "f3[4,1]"},
    {"1", "1", "e2[6,6]", "f3[3,3]"},
    {"1", "1", "e4[2,1]", "f1[3,3]"},
    {"1", "1", "e3[1,1]", "f3[3,3]"},
    {"-1", "1", "e3[4,1]", "f1[3,3]"},
    {"1", "1", "e4[2,1]", "f3[5,5]"},
    {"1", "1", "e3[2,1]", "f1[3,3]"},
    {"1", "1", "e2[2,1]", "f1[3,3]"},
    {"-1", "1", "e2[4,1]", "f1[3,3]"},
    {"1", "1", "e3[4,4]", "f3[5,5]"},
    {"1", "1", "e2[6,6]", "f3[5,5]"},
    {"1", "1", "e3[2,1]", "f3[5,5]"},
    {"1", "1", "e1[2,1]", "f1[3,3]"},
    {"1", "1", "e3[4,3]", "f1[2,3]"},
    {"-1", "1", "e3[3,3]", "f3[2,1]"},
    {"1", "1", "e2[6,4]", "f3[2,1]"},
    {"1", "1", "e2[4,1]", "f1[2,3]"},
    {"1", "1", "e2[4,3]", "f1[2,3]"},
    {"-1", "1", "e2[6,6]", "f3[2,1]"},
    {"1", "1", "e2[4,4]", "f3[5,5]"},
    {"1", "1", "e3[1,3]", "f3[2,1]"},
    {"1", "1", "e3[4,1]", "f1[2,3]"},
    {"1", "1", "e2[5,3]", "f3[5,5]"},
    {"-1", "1", "e2[3,3]", "f3[2,1]"},
    {"1", "1", "e2[2,1]", "f3[5,5]"},
    {"-1", "1", "e2[1,1]", "f3[2,1]"},
    {"1", "1", "e1[2,1]", "f3[5,5]"},
    {"-1", "1", "e1[1,1]", "f3[2,1]"},
    {"1", "1", "e2[5,6]", "f3[4,5]"},
    {"1", "1", "e2[5,1]", "f3[4,5]"},
    {"1", "1", "e4[2,1]", "f3[3,5]"},
    {"1", "1", "e4[2,1]", "f1[2,2]"},
    {"1", "1", "e1[2,1]", "f1[3,2]"},
    {"1", "1", "e3[2,1]", "f3[3,5]"},
    {"1", "1", "e3[2,1]", "f1[2,2]"},
    {"1", "1", "e3[2,3]", "f1[2,2]"},
    {"1", "1", "e3[4,4]", "f1[2,2]"},
    {"1", "1", "e2[2,3]", "f1[2,2]"},
    {"1", "1", "e2[4,4]", "f1[2,2]"},
    {"1", "1", "e2[2,1]", "f1[2,2]"},
    {"1", "1", "e1[2,1]", "f3[3,5]"},
    {"1", "1", "e2[1,1]", "f3[3,3]"},
    {"1", "1", "e2[2,1]", "f3[3,5]"},
    {"1", "1", "e1[1,1]", "f3[3,3]"},
    {"-1", "1", "e2[5,3]", "f3[2,5]"},
    {"-1", "1", "e3[3,3]", "f1[2,1]"},
    {"1", "1", "e3[1,3]", "f1[2,1]"},
    {"-1", "1", "e2[5,1]", "f3[2,5]"},
    {"1", "1", "e1[1,1]", "f1[3,1]"},
    {"-1", "1", "e1[1,1]", "f1[2,1]"},
    {"1", "1", "e2[6,4]", "f1[2,1]"},
    {"-1", "1", "e2[3,3]", "f1[2,1]"},
    {"1", "1", "e2[1,3]", "f1[2,1]"},
    {"-1", "1", "e2[6,6]", "f1[2,1]"},
    {"-1", "1", "e3[4,3]", "f3[5,4]"},
    {"1", "1", "e4[2,1]", "f3[4,4]"},
    {"1", "1", "e2[2,6]", "f3[4,2]"},
    {"-1", "1", "e3[4,1]", "f3[4,4]"},
    {"1", "1", "e3[2,1]", "f3[4,4]"},
    {"1", "1", "e2[4,6]", "f3[4,4]"},
    {"-1", "1", "e2[3,3]", "f3[2,3]"},
    {"1", "1", "e2[2,1]", "f3[4,4]"},
    {"1", "1", "e1[2,1]", "f3[4,4]"},
    {"-1", "1", "e2[3,1]", "f3[2,3]"},
    {"1", "1", "e3[4,1]", "f3[2,4]"},
    {"1", "1", "e3[4,3]", "f3[2,4]"},
    {"1", "1", "e4[1,1]", "f4[3,3]"},
    {"1", "1", "e3[1,1]", "f4[3,3]"},
    {"1", "1", "e2[6,6]", "f4[3,3]"},
    {"1", "1", "e2[1,1]", "f4[3,3]"},
    {"-1", "1", "e3[3,3]", "f3[5,3]"},
    {"1", "1", "e1[1,1]", "f4[3,3]"},
    {"-1", "1", "e3[3,3]", "f4[2,3]"},
    {"-1", "1", "e3[3,1]", "f4[2,3]"},
    {"lambda", "1", "", "f5 e4[1,2]"},
};

const PEntry kPEntries[] = {
    {"e1[1,1]", "f1[1,1]", "1", "1"},
    {"e1[1,2]", "f1[1,2]", "1", "1"},
    {"e1[2,1]", "f1[2,1]", "1", "1"},
    {"e1[2,2]", "f1[2,2]", "1", "1"},
    {"e3[1,1]", "f3[1,1]", "1", "1"},
    {"e3[1,1]", "f4[1,1]", "1", "1"},
    {"e3[1,2]", "f3[1,2]", "1", "1"},
    {"e3[1,2]", "f4[1,2]", "1", "1"},
    {"e3[1,3]", "f3[1,3]", "1", "1"},
    {"e3[1,3]", "f4[1,3]", "1", "1"},
    {"e3[1,4]", "f3[1,4]", "1", "1"},
    {"e3[2,1]", "f3[2,1]", "1", "1"},
    {"e3[2,1]", "f4[2,1]", "1", "1"},
    {"e3[2,2]", "f3[2,2]", "1", "1"},
    {"e3[2,2]", "f4[2,2]", "1", "1"},
    {"e3[2,3]", "f3[2,3]", "1", "1"},
    {"e3[2,3]", "f4[2,3]", "1", "1"},
    {"e3[2,4]", "f3[2,4]", "1", "1"},
    {"e3[3,1]", "f3[3,1]", "1", "1"},
    {"e3[3,1]", "f4[3,1]", "1", "1"},
    {"e3[3,2]", "f3[3,2]", "1", "1"},
    {"e3[3,2]", "f4[3,2]", "1", "1"},
    {"e3[3,3]", "f3[3,3]", "1", "1"},
    {"e3[3,3]", "f4[3,3]", "1", "1"},
    {"e3[3,4]", "f3[3,4]", "1", "1"},
    {"e3[4,1]", "f3[4,1]", "1", "1"},
    {"e3[4,2]", "f3[4,2]", "1", "1"},
    {"e3[4,3]", "f3[4,3]", "1", "1"},
    {"e3[4,4]", "f3[4,4]", "1", "1"},
    {"e4[1,1]", "f4[1,1]", "1", "1"},
    {"e4[1,2]", "f4[1,2]", "1", "1"},
    {"e4[2,1]", "f4[2,1]", "1", "1"},
    {"e4[2,2]", "f4[2,2]", "1", "1"},
    {"e4[1,1]", "f5", "1", "1"},
    {"e2[1,1]", "f3[1,1]", "1", "1"},
    {"e2[1,1]", "f2[2,2]", "1", "1"},
    {"e2[1,1]", "f2[2,3]", "1", "1"},
    {"e2[1,1]", "f2[3,2]", "1", "1"},
    {"e2[1,1]", "f2[3,3]", "1", "1"},
    {"e2[1,1]", "f1[1,1]", "1", "1"},
    {"e2[1,2]", "f3[1,2]", "1", "1"},
    {"e2[1,2]", "f2[2,1]", "1", "1"},
    {"e2[1,2]", "f2[3,1]", "1", "1"},
    {"e2[1,2]", "f1[1,2]", "1", "1"},
    {"e2[1,3]", "f3[1,3]", "1", "1"},
    {"e2[1,3]", "f2[2,2]", "1", "1"},
    {"e2[1,3]", "f2[3,2]", "1", "1"},
    {"e2[1,4]", "f3[1,4]", "1", "1"},
    {"e2[1,4]", "f2[2,1]", "1", "1"},
    {"e2[1,4]", "f2[2,2]", "1", "1"},
    {"e2[1,4]", "f2[3,1]", "1", "1"},
    {"e2[1,4]", "f2[3,2]", "1", "1"},
    {"e2[1,4]", "f1[1,3]", "1", "1"},
    {"e2[1,5]", "f3[1,5]", "1", "1"},
    {"e2[1,5]", "f2[2,1]", "1", "1"},
    {"e2[1,5]", "f2[2,3]", "t", "1"},
    {"e2[1,5]", "f2[3,1]", "1", "1"},
    {"e2[1,5]", "f2[3,3]", "t", "1"},
    {"e2[1,6]", "f2[2,3]", "1", "1"},
    {"e2[1,6]", "f2[3,3]", "1", "1"},
    {"e2[1,6]", "f1[1,4]", "1", "1"},
    {"e2[2,1]", "f3[2,1]", "1", "1"},
    {"e2[2,1]", "f2[1,2]", "1", "1"},
    {"e2[2,1]", "f2[1,3]", "1", "1"},
    {"e2[2,1]", "f1[2,1]", "1", "1"},
    {"e2[2,2]", "f3[2,2]", "1", "1"},
    {"e2[2,2]", "f2[1,1]", "1", "1"},
    {"e2[2,2]", "f1[2,2]", "1", "1"},
    {"e2[2,3]", "f3[2,3]", "1", "1"},
    {"e2[2,3]", "f2[1,2]", "1", "1"},
    {"e2[2,4]", "f3[2,4]", "1", "1"},
    {"e2[2,4]", "f2[1,1]", "1", "1"},
    {"e2[2,4]", "f2[1,2]", "1", "1"},
    {"e2[2,4]", "f1[2,3]", "1", "1"},
    {"e2[2,5]", "f3[2,5]", "1", "1"},
    {"e2[2,5]", "f2[1,1]", "1", "1"},
    {"e2[2,5]", "f2[1,3]", "t", "1"},
    {"e2[2,6]", "f2[1,3]", "1", "1"},
    {"e2[2,6]", "f1[2,4]", "1", "1"},
    {"e2[3,1]", "f3[3,1]", "1", "1"},
    {"e2[3,1]", "f2[2,2]", "1", "1"},
    {"e2[3,1]", "f2[2,3]", "1", "1"},
    {"e2[3,2]", "f3[3,2]", "1", "1"},
    {"e2[3,2]", "f2[2,1]", "1", "1"},
    {"e2[3,3]", "f3[3,3]", "1", "1"},
    {"e2[3,3]", "f2[2,2]", "1", "1"},
    {"e2[3,4]", "f3[3,4]", "1", "1"},
    {"e2[3,4]", "f2[2,1]", "1", "1"},
    {"e2[3,4]", "f2[2,2]", "1", "1"},
    {"e2[3,5]", "f3[3,5]", "1", "1"},
    {"e2[3,5]", "f2[2,1]", "1", "1"},
    {"e2[3,5]", "f2[2,3]", "t", "1"},
    {"e2[3,6]", "f2[2,3]", "1", "1"},
    {"e2[4,1]", "f3[4,1]", "1", "1"},
    {"e2[4,1]", "f2[1,2]", "1", "1"},
    {"e2[4,1]", "f2[1,3]", "1", "1"},
    {"e2[4,1]", "f2[2,2]", "1", "1"},
    {"e2[4,1]", "f2[2,3]", "1", "1"},
    {"e2[4,1]", "f1[3,1]", "1", "1"},
    {"e2[4,2]", "f3[4,2]", "1", "1"},
    {"e2[4,2]", "f2[1,1]", "1", "1"},
    {"e2[4,2]", "f2[2,1]", "1", "1"},
    {"e2[4,2]", "f1[3,2]", "1", "1"},
    {"e2[4,3]", "f3[4,3]", "1", "1"},
    {"e2[4,3]", "f2[1,2]", "1", "1"},
    {"e2[4,3]", "f2[2,2]", "1", "1"},
    {"e2[4,4]", "f3[4,4]", "1", "1"},
    {"e2[4,4]", "f2[1,1]", "1", "1"},
    {"e2[4,4]", "f2[1,2]", "1", "1"},
    {"e2[4,4]", "f2[2,1]", "1", "1"},
    {"e2[4,4]", "f2[2,2]", "1", "1"},
    {"e2[4,4]", "f1[3,3]", "1", "1"},
    {"e2[4,5]", "f3[4,5]", "1", "1"},
    {"e2[4,5]", "f2[1,1]", "1", "1"},
    {"e2[4,5]", "f2[1,3]", "t", "1"},
    {"e2[4,5]", "f2[2,1]", "1", "1"},
    {"e2[4,5]", "f2[2,3]", "t", "1"},
    {"e2[4,6]", "f2[1,3]", "1", "1"},
    {"e2[4,6]", "f2[2,3]", "1", "1"},
    {"e2[4,6]", "f1[3,4]", "1", "1"},
    {"e2[5,1]", "f3[5,1]", "1", "1"},
    {"e2[5,1]", "f2[1,2]", "1", "1"},
    {"e2[5,1]", "f2[1,3]", "1", "1"},
    {"e2[5,1]", "f2[3,2]", "lambda", "1"},
    {"e2[5,1]", "f2[3,3]", "lambda", "1"},
    {"e2[5,2]", "f3[5,2]", "1", "1"},
    {"e2[5,2]", "f2[1,1]", "1", "1"},
    {"e2[5,2]", "f2[3,1]", "lambda", "1"},
    {"e2[5,3]", "f3[5,3]", "1", "1"},
    {"e2[5,3]", "f2[1,2]", "1", "1"},
    {"e2[5,3]", "f2[3,2]", "lambda", "1"},
    {"e2[5,4]", "f3[5,4]", "1", "1"},
    {"e2[5,4]", "f2[1,1]", "1", "1"},
    {"e2[5,4]", "f2[1,2]", "1", "1"},
    {"e2[5,4]", "f2[3,1]", "lambda", "1"},
    {"e2[5,4]", "f2[3,2]", "lambda", "1"},
    {"e2[5,5]", "f3[5,5]", "1", "1"},
    {"e2[5,5]", "f2[1,1]", "1", "1"},
    {"e2[5,5]", "f2[1,3]", "t", "1"},
    {"e2[5,5]", "f2[3,1]", "lambda", "1"},
    {"e2[5,5]", "f2[3,3]", "lambda*t", "1"},
    {"e2[5,6]", "f2[1,3]", "1", "1"},
    {"e2[5,6]", "f2[3,3]", "lambda", "1"},
    {"e2[6,1]", "f2[3,2]", "1", "1"},
    {"e2[6,1]", "f2[3,3]", "1", "1"},
    {"e2[6,1]", "f1[4,1]", "1", "1"},
    {"e2[6,2]", "f2[3,1]", "1", "1"},
    {"e2[6,2]", "f1[4,2]", "1", "1"},
    {"e2[6,3]", "f2[3,2]", "1", "1"},
    {"e2[6,4]", "f2[3,1]", "1", "1"},
    {"e2[6,4]", "f2[3,2]", "1", "1"},
    {"e2[6,4]", "f1[4,3]", "1", "1"},
    {"e2[6,5]", "f2[3,1]", "1", "1"},
    {"e2[6,5]", "f2[3,3]", "t", "1"},
    {"e2[6,6]", "f2[3,3]", "1", "1"},
    {"e2[6,6]", "f1[4,4]", "1", "1"},
};

}  // namespace

const FamilyData kE8{
    kABlocks, sizeof(kABlocks) / sizeof(kABlocks[0]),
    kBBlocks, sizeof(kBBlocks) / sizeof(kBBlocks[0]),
    kRels, sizeof(kRels) / sizeof(kRels[0]),
    kRTerms, sizeof(kRTerms) / sizeof(kRTerms[0]),
    kPEntries, sizeof(kPEntries) / sizeof(kPEntries[0]),
    "lambda*t - lambda", "t - lambda",
};

}  // namespace pencil::fdata
