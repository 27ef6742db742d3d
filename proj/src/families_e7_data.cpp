#include "families_data.hpp"

namespace pencil::fdata {
namespace {

const BlockRow kABlocks[] = {
    {"e1", 1},
    {"e2", 3},
    {"e3", 2},
    {"e4", 3},
    {"e5", 1},
};
const BlockRow kBBlocks[] = {
    {"f1", 2},
    {"f2", 4},
    {"f3", 2},
};

const CrossRel kRels[] = {
    {"f1[1,1]", "e3[1,1]", "0", "1", "", ""},
    {"f1[1,1]", "e3[1,2]", "0", "1", "", ""},
    {"f1[1,1]", "e3[2,1]", "0", "1", "", ""},
    {"f1[1,1]", "e3[2,2]", "0", "1", "", ""},
    {"f1[1,2]", "e3[1,1]", "0", "1", "", ""},
    {"f1[1,2]", "e3[1,2]", "0", "1", "", ""},
    {"f1[1,2]", "e3[2,1]", "0", "1", "", ""},
    {"f1[1,2]", "e3[2,2]", "0", "1", "", ""},
    {"f1[2,1]", "e3[1,1]", "0", "1", "", ""},
    {"f1[2,1]", "e3[1,2]", "0", "1", "", ""},
    {"f1[2,1]", "e3[2,1]", "0", "1", "", ""},
    {"f1[2,1]", "e3[2,2]", "0", "1", "", ""},
    {"f1[2,2]", "e3[1,1]", "0", "1", "", ""},
    {"f1[2,2]", "e3[1,2]", "0", "1", "", ""},
    {"f1[2,2]", "e3[2,1]", "0", "1", "", ""},
    {"f1[2,2]", "e3[2,2]", "0", "1", "", ""},
    {"f1[1,1]", "e4[1,1]", "0", "1", "", ""},
    {"f1[1,1]", "e4[1,2]", "0", "1", "", ""},
    {"f1[1,1]", "e4[1,3]", "0", "1", "", ""},
    {"f1[1,1]", "e4[2,1]", "0", "1", "", ""},
    {"f1[1,1]", "e4[2,2]", "0", "1", "", ""},
    {"f1[1,1]", "e4[2,3]", "0", "1", "", ""},
    {"f1[1,1]", "e4[3,1]", "0", "1", "", ""},
    {"f1[1,1]", "e4[3,2]", "0", "1", "", ""},
    {"f1[1,1]", "e4[3,3]", "0", "1", "", ""},
    {"f1[1,2]", "e4[1,1]", "0", "1", "", ""},
    {"f1[1,2]", "e4[1,2]", "0", "1", "", ""},
    {"f1[1,2]", "e4[1,3]", "0", "1", "", ""},
    {"f1[1,2]", "e4[2,1]", "0", "1", "", ""},
    {"f1[1,2]", "e4[2,2]", "0", "1", "", ""},
    {"f1[1,2]", "e4[2,3]", "0", "1", "", ""},
    {"f1[1,2]", "e4[3,1]", "0", "1", "", ""},
    {"f1[1,2]", "e4[3,2]", "0", "1", "", ""},
    {"f1[1,2]", "e4[3,3]", "0", "1", "", ""},
    {"f1[2,1]", "e4[1,1]", "0", "1", "", ""},
    {"f1[2,1]", "e4[1,2]", "0", "1", "", ""},
    {"f1[2,1]", "e4[1,3]", "0", "1", "", ""},
    {"f1[2,1]", "e4[2,1]", "0", "1", "", ""},
    {"f1[2,1]", "e4[2,2]", "0", "1", "", ""},
    {"f1[2,1]", "e4[2,3]", "0", "1", "", ""},
    {"f1[2,1]", "e4[3,1]", "0", "1", "", ""},
    {"f1[2,1]", "e4[3,2]", "0", "1", "", ""},
    {"f1[2,1]", "e4[3,3]", "0", "1", "", ""},
    {"f1[2,2]", "e4[1,1]", "0", "1", "", ""},
    {"f1[2,2]", "e4[1,2]", "0", "1", "", ""},
    {"f1[2,2]", "e4[1,3]", "0", "1", "", ""},
    {"f1[2,2]", "e4[2,1]", "0", "1", "", ""},
    {"f1[2,2]", "e4[2,2]", "0", "1", "", ""},
    {"f1[2,2]", "e4[2,3]", "0", "1", "", ""},
    {"f1[2,2]", "e4[3,1]", "0", "1", "", ""},
    {"f1[2,2]", "e4[3,2]", "0", "1", "", ""},
    {"f1[2,2]", "e4[3,3]", "0", "1", "", ""},
    {"f1[1,1]", "e5", "0", "1", "", ""},
    {"f1[1,2]", "e5", "0", "1", "", ""},
    {"f1[2,1]", "e5", "0", "1", "", ""},
    {"f1[2,2]", "e5", "0", "1", "", ""},
    {"f2[1,1]", "e1", "0", "1", "", ""},
    {"f2[1,2]", "e1", "0", "1", "", ""},
    {"f2[1,3]", "e1", "0", "1", "", ""},
    {"f2[1,4]", "e1", "0", "1", "", ""},
    {"f2[2,1]", "e1", "0", "1", "", ""},
    {"f2[2,2]", "e1", "0", "1", "", ""},
    {"f2[2,3]", "e1", "0", "1", "", ""},
    {"f2[2,4]", "e1", "0", "1", "", ""},
    {"f2[3,1]", "e1", "0", "1", "", ""},
    {"f2[3,2]", "e1", "0", "1", "", ""},
    {"f2[3,3]", "e1", "0", "1", "", ""},
    {"f2[3,4]", "e1", "0", "1", "", ""},
    {"f2[4,1]", "e1", "0", "1", "", ""},
    {"f2[4,2]", "e1", "0", "1", "", ""},
    {"f2[4,3]", "e1", "0", "1", "", ""},
    {"f2[4,4]", "e1", "0", "1", "", ""},
    {"f2[1,1]", "e5", "0", "1", "", ""},
    {"f2[1,2]", "e5", "0", "1", "", ""},
    {"f2[1,3]", "e5", "0", "1", "", ""},
    {"f2[1,4]", "e5", "0", "1", "", ""},
    {"f2[2,1]", "e5", "0", "1", "", ""},
    {"f2[2,2]", "e5", "0", "1", "", ""},
    {"f2[2,3]", "e5", "0", "1", "", ""},
    {"f2[2,4]", "e5", "0", "1", "", ""},
    {"f2[3,1]", "e5", "0", "1", "", ""},
    {"f2[3,2]", "e5", "0", "1", "", ""},
    {"f2[3,3]", "e5", "0", "1", "", ""},
    {"f2[3,4]", "e5", "0", "1", "", ""},
    {"f2[4,1]", "e5", "0", "1", "", ""},
    {"f2[4,2]", "e5", "0", "1", "", ""},
    {"f2[4,3]", "e5", "0", "1", "", ""},
    {"f2[4,4]", "e5", "0", "1", "", ""},
    {"f3[1,1]", "e1", "0", "1", "", ""},
    {"f3[1,2]", "e1", "0", "1", "", ""},
    {"f3[2,1]", "e1", "0", "1", "", ""},
    {"f3[2,2]", "e1", "0", "1", "", ""},
    {"f3[1,1]", "e2[1,1]", "0", "1", "", ""},
    {"f3[1,1]", "e2[1,2]", "0", "1", "", ""},
    {"f3[1,1]", "e2[1,3]", "0", "1", "", ""},
    {"f3[1,1]", "e2[2,1]", "0", "1", "", ""},
    {"f3[1,1]", "e2[2,2]", "0", "1", "", ""},
    {"f3[1,1]", "e2[2,3]", "0", "1", "", ""},
    {"f3[1,1]", "e2[3,1]", "0", "1", "", ""},
    {"f3[1,1]", "e2[3,2]", "0", "1", "", ""},
    {"f3[1,1]", "e2[3,3]", "0", "1", "", ""},
    {"f3[1,2]", "e2[1,1]", "0", "1", "", ""},
    {"f3[1,2]", "e2[1,2]", "0", "1", "", ""},
    {"f3[1,2]", "e2[1,3]", "0", "1", "", ""},
    {"f3[1,2]", "e2[2,1]", "0", "1", "", ""},
    {"f3[1,2]", "e2[2,2]", "0", "1", "", ""},
    {"f3[1,2]", "e2[2,3]", "0", "1", "", ""},
    {"f3[1,2]", "e2[3,1]", "0", "1", "", ""},
    {"f3[1,2]", "e2[3,2]", "0", "1", "", ""},
    {"f3[1,2]", "e2[3,3]", "0", "1", "", ""},
    {"f3[2,1]", "e2[1,1]", "0", "1", "", ""},
    {"f3[2,1]", "e2[1,2]", "0", "1", "", ""},
    {"f3[2,1]", "e2[1,3]", "0", "1", "", ""},
    {"f3[2,1]", "e2[2,1]", "0", "1", "", ""},
    {"f3[2,1]", "e2[2,2]", "0", "1", "", ""},
    {"f3[2,1]", "e2[2,3]", "0", "1", "", ""},
    {"f3[2,1]", "e2[3,1]", "0", "1", "", ""},
    {"f3[2,1]", "e2[3,2]", "0", "1", "", ""},
    {"f3[2,1]", "e2[3,3]", "0", "1", "", ""},
    {"f3[2,2]", "e2[1,1]", "0", "1", "", ""},
    {"f3[2,2]", "e2[1,2]", "0", "1", "", ""},
    {"f3[2,2]", "e2[1,3]", "0", "1", "", ""},
    {"f3[2,2]", "e2[2,1]", "0", "1", "", ""},
    {"f3[2,2]", "e2[2,2]", "0", "1", "", ""},
    {"f3[2,2]", "e2[2,3]", "0", "1", "", ""},
    {"f3[2,2]", "e2[3,1]", "0", "1", "", ""},
    {"f3[2,2]", "e2[3,2]", "0", "1", "", ""},
    {"f3[2,2]", "e2[3,3]", "0", "1", "", ""},
    {"f3[1,1]", "e3[1,1]", "0", "1", "", ""},
    {"f3[1,1]", "e3[1,2]", "0", "1", "", ""},
    {"f3[1,1]", "e3[2,1]", "0", "1", "", ""},
    {"f3[1,1]", "e3[2,2]", "0", "1", "", ""},
    {"f3[1,2]", "e3[1,1]", "0", "1", "", ""},
    {"f3[1,2]", "e3[1,2]", "0", "1", "", ""},
    {"f3[1,2]", "e3[2,1]", "0", "1", "", ""},
    {"f3[1,2]", "e3[2,2]", "0", "1", "", ""},
    {"f3[2,1]", "e3[1,1]", "0", "1", "", ""},
    {"f3[2,1]", "e3[1,2]", "0", "1", "", ""},
    {"f3[2,1]", "e3[2,1]", "0", "1", "", ""},
    {"f3[2,1]", "e3[2,2]", "0", "1", "", ""},
    {"f3[2,2]", "e3[1,1]", "0", "1", "", ""},
    {"f3[2,2]", "e3[1,2]", "0", "1", "", ""},
    {"f3[2,2]", "e3[2,1]", "0", "1", "", ""},
    {"f3[2,2]", "e3[2,2]", "0", "1", "", ""},
    {"f1[1,2]", "e1", "0", "1", "", ""},
    {"f3[1,2]", "e5", "0", "1", "", ""},
    {"f1[2,2]", "e1", "0", "1", "", ""},
    {"f3[2,2]", "e5", "0", "1", "", ""},
    {"f1[1,1]", "e2[2,1]", "0", "1", "", ""},
    {"f3[1,1]", "e4[2,1]", "0", "1", "", ""},
    {"f1[1,1]", "e2[2,2]", "0", "1", "", ""},
    {"f3[1,1]", "e4[2,2]", "0", "1", "", ""},
    {"f1[1,1]", "e2[2,3]", "0", "1", "", ""},
    {"f3[1,1]", "e4[2,3]", "0", "1", "", ""},
    {"f1[1,1]", "e2[3,1]", "0", "1", "", ""},
    {"f3[1,1]", "e4[3,1]", "0", "1", "", ""},
    {"f1[1,1]", "e2[3,2]", "0", "1", "", ""},
    {"f3[1,1]", "e4[3,2]", "0", "1", "", ""},
    {"f1[1,1]", "e2[3,3]", "0", "1", "", ""},
    {"f3[1,1]", "e4[3,3]", "0", "1", "", ""},
    {"f1[1,2]", "e2[1,1]", "0", "1", "", ""},
    {"f3[1,2]", "e4[1,1]", "0", "1", "", ""},
    {"f1[1,2]", "e2[1,2]", "0", "1", "", ""},
    {"f3[1,2]", "e4[1,2]", "0", "1", "", ""},
    {"f1[1,2]", "e2[1,3]", "0", "1", "", ""},
    {"f3[1,2]", "e4[1,3]", "0", "1", "", ""},
    {"f1[1,2]", "e2[3,1]", "0", "1", "", ""},
    {"f3[1,2]", "e4[3,1]", "0", "1", "", ""},
    {"f1[1,2]", "e2[3,2]", "0", "1", "", ""},
    {"f3[1,2]", "e4[3,2]", "0", "1", "", ""},
    {"f1[1,2]", "e2[3,3]", "0", "1", "", ""},
    {"f3[1,2]", "e4[3,3]", "0", "1", "", ""},
    {"f1[2,1]", "e2[2,1]", "0", "1", "", ""},
    {"f3[2,1]", "e4[2,1]", "0", "1", "", ""},
    {"f1[2,1]", "e2[2,2]", "0", "1", "", ""},
    {"f3[2,1]", "e4[2,2]", "0", "1", "", ""},
    {"f1[2,1]", "e2[2,3]", "0", "1", "", ""},
    {"f3[2,1]", "e4[2,3]", "0", "1", "", ""},
    {"f1[2,1]", "e2[3,1]", "0", "1", "", ""},
    {"f3[2,1]", "e4[3,1]", "0", "1", "", ""},
    {"f1[2,1]", "e2[3,2]", "0", "1", "", ""},
    {"f3[2,1]", "e4[3,2]", "0", "1", "", ""},
    {"f1[2,1]", "e2[3,3]", "0", "1", "", ""},
    {"f3[2,1]", "e4[3,3]", "0", "1", "", ""},
    {"f1[2,2]", "e2[1,1]", "0", "1", "", ""},
    {"f3[2,2]", "e4[1,1]", "0", "1", "", ""},
    {"f1[2,2]", "e2[1,2]", "0", "1", "", ""},
    {"f3[2,2]", "e4[1,2]", "0", "1", "", ""},
    {"f1[2,2]", "e2[1,3]", "0", "1", "", ""},
    {"f3[2,2]", "e4[1,3]", "0", "1", "", ""},
    {"f1[2,2]", "e2[3,1]", "0", "1", "", ""},
    {"f3[2,2]", "e4[3,1]", "0", "1", "", ""},
    {"f1[2,2]", "e2[3,2]", "0", "1", "", ""},
    {"f3[2,2]", "e4[3,2]", "0", "1", "", ""},
    {"f1[2,2]", "e2[3,3]", "0", "1", "", ""},
    {"f3[2,2]", "e4[3,3]", "0", "1", "", ""},
    {"f1[1,1]", "e2[1,1]", "1", "1", "f1[1,2]", "e2[2,1]"},
    {"f3[1,1]", "e4[1,1]", "1", "1", "f3[1,2]", "e4[2,1]"},
    {"f1[1,1]", "e2[1,2]", "1", "1", "f1[1,2]", "e2[2,2]"},
    {"f3[1,1]", "e4[1,2]", "1", "1", "f3[1,2]", "e4[2,2]"},
    {"f1[1,1]", "e2[1,3]", "1", "1", "f1[1,2]", "e2[2,3]"},
    {"f3[1,1]", "e4[1,3]", "1", "1", "f3[1,2]", "e4[2,3]"},
    {"f1[2,1]", "e2[1,1]", "1", "1", "f1[2,2]", "e2[2,1]"},
    {"f3[2,1]", "e4[1,1]", "1", "1", "f3[2,2]", "e4[2,1]"},
    {"f1[2,1]", "e2[1,2]", "1", "1", "f1[2,2]", "e2[2,2]"},
    {"f3[2,1]", "e4[1,2]", "1", "1", "f3[2,2]", "e4[2,2]"},
    {"f1[2,1]", "e2[1,3]", "1", "1", "f1[2,2]", "e2[2,3]"},
    {"f3[2,1]", "e4[1,3]", "1", "1", "f3[2,2]", "e4[2,3]"},
    {"f2[1,1]", "e2[2,1]", "0", "1", "", ""},
    {"f2[1,1]", "e2[2,2]", "0", "1", "", ""},
    {"f2[1,1]", "e2[2,3]", "0", "1", "", ""},
    {"f2[1,1]", "e2[3,1]", "0", "1", "", ""},
    {"f2[1,1]", "e2[3,2]", "0", "1", "", ""},
    {"f2[1,1]", "e2[3,3]", "0", "1", "", ""},
    {"f2[1,2]", "e2[1,1]", "0", "1", "", ""},
    {"f2[1,2]", "e2[1,2]", "0", "1", "", ""},
    {"f2[1,2]", "e2[1,3]", "0", "1", "", ""},
    {"f2[1,2]", "e2[3,1]", "0", "1", "", ""},
    {"f2[1,2]", "e2[3,2]", "0", "1", "", ""},
    {"f2[1,2]", "e2[3,3]", "0", "1", "", ""},
    {"f2[1,3]", "e2[1,1]", "0", "1", "", ""},
    {"f2[1,3]", "e2[1,2]", "0", "1", "", ""},
    {"f2[1,3]", "e2[1,3]", "0", "1", "", ""},
    {"f2[1,3]", "e2[2,1]", "0", "1", "", ""},
    {"f2[1,3]", "e2[2,2]", "0", "1", "", ""},
    {"f2[1,3]", "e2[2,3]", "0", "1", "", ""},
    {"f2[1,4]", "e2[1,1]", "0", "1", "", ""},
    {"f2[1,4]", "e2[1,2]", "0", "1", "", ""},
    {"f2[1,4]", "e2[1,3]", "0", "1", "", ""},
    {"f2[1,4]", "e2[2,1]", "0", "1", "", ""},
    {"f2[1,4]", "e2[2,2]", "0", "1", "", ""},
    {"f2[1,4]", "e2[2,3]", "0", "1", "", ""},
    {"f2[1,4]", "e2[3,1]", "0", "1", "", ""},
    {"f2[1,4]", "e2[3,2]", "0", "1", "", ""},
    {"f2[1,4]", "e2[3,3]", "0", "1", "", ""},
    {"f2[2,1]", "e2[2,1]", "0", "1", "", ""},
    {"f2[2,1]", "e2[2,2]", "0", "1", "", ""},
    {"f2[2,1]", "e2[2,3]", "0", "1", "", ""},
    {"f2[2,1]", "e2[3,1]", "0", "1", "", ""},
    {"f2[2,1]", "e2[3,2]", "0", "1", "", ""},
    {"f2[2,1]", "e2[3,3]", "0", "1", "", ""},
    {"f2[2,2]", "e2[1,1]", "0", "1", "", ""},
    {"f2[2,2]", "e2[1,2]", "0", "1", "", ""},
    {"f2[2,2]", "e2[1,3]", "0", "1", "", ""},
    {"f2[2,2]", "e2[3,1]", "0", "1", "", ""},
    {"f2[2,2]", "e2[3,2]", "0", "1", "", ""},
    {"f2[2,2]", "e2[3,3]", "0", "1", "", ""},
    {"f2[2,3]", "e2[1,1]", "0", "1", "", ""},
    {"f2[2,3]", "e2[1,2]", "0", "1", "", ""},
    {"f2[2,3]", "e2[1,3]", "0", "1", "", ""},
    {"f2[2,3]", "e2[2,1]", "0", "1", "", ""},
    {"f2[2,3]", "e2[2,2]", "0", "1", "", ""},
    {"f2[2,3]", "e2[2,3]", "0", "1", "", ""},
    {"f2[2,4]", "e2[1,1]", "0", "1", "", ""},
    {"f2[2,4]", "e2[1,2]", "0", "1", "", ""},
    {"f2[2,4]", "e2[1,3]", "0", "1", "", ""},
    {"f2[2,4]", "e2[2,1]", "0", "1", "", ""},
    {"f2[2,4]", "e2[2,2]", "0", "1", "", ""},
    {"f2[2,4]", "e2[2,3]", "0", "1", "", ""},
    {"f2[2,4]", "e2[3,1]", "0", "1", "", ""},
    {"f2[2,4]", "e2[3,2]", "0", "1", "", ""},
    {"f2[2,4]", "e2[3,3]", "0", "1", "", ""},
    {"f2[3,1]", "e2[2,1]", "0", "1", "", ""},
    {"f2[3,1]", "e2[2,2]", "0", "1", "", ""},
    {"f2[3,1]", "e2[2,3]", "0", "1", "", ""},
    {"f2[3,1]", "e2[3,1]", "0", "1", "", ""},
    {"f2[3,1]", "e2[3,2]", "0", "1", "", ""},
    {"f2[3,1]", "e2[3,3]", "0", "1", "", ""},
    {"f2[3,2]", "e2[1,1]", "0", "1", "", ""},
    {"f2[3,2]", "e2[1,2]", "0", "1", "", ""},
    {"f2[3,2]", "e2[1,3]", "0", "1", "", ""},
    {"f2[3,2]", "e2[3,1]", "0", "1", "", ""},
    {"f2[3,2]", "e2[3,2]", "0", "1", "", ""},
    {"f2[3,2]", "e2[3,3]", "0", "1", "", ""},
    {"f2[3,3]", "e2[1,1]", "0", "1", "", ""},
    {"f2[3,3]", "e2[1,2]", "0", "1", "", ""},
    {"f2[3,3]", "e2[1,3]", "0", "1", "", ""},
    {"f2[3,3]", "e2[2,1]", "0", "1", "", ""},
    {"f2[3,3]", "e2[2,2]", "0", "1", "", ""},
    {"f2[3,3]", "e2[2,3]", "0", "1", "", ""},
    {"f2[3,4]", "e2[1,1]", "0", "1", "", ""},
    {"f2[3,4]", "e2[1,2]", "0", "1", "", ""},
    {"f2[3,4]", "e2[1,3]", "0", "1", "", ""},
    {"f2[3,4]", "e2[2,1]", "0", "1", "", ""},
    {"f2[3,4]", "e2[2,2]", "0", "1", "", ""},
    {"f2[3,4]", "e2[2,3]", "0", "1", "", ""},
    {"f2[3,4]", "e2[3,1]", "0", "1", "", ""},
    {"f2[3,4]", "e2[3,2]", "0", "1", "", ""},
    {"f2[3,4]", "e2[3,3]", "0", "1", "", ""},
    {"f2[4,1]", "e2[2,1]", "0", "1", "", ""},
    {"f2[4,1]", "e2[2,2]", "0", "1", "", ""},
    {"f2[4,1]", "e2[2,3]", "0", "1", "", ""},
    {"f2[4,1]", "e2[3,1]", "0", "1", "", ""},
    {"f2[4,1]", "e2[3,2]", "0", "1", "", ""},
    {"f2[4,1]", "e2[3,3]", "0", "1", "", ""},
    {"f2[4,2]", "e2[1,1]", "0", "1", "", ""},
    {"f2[4,2]", "e2[1,2]", "0", "1", "", ""},
    {"f2[4,2]", "e2[1,3]", "0", "1", "", ""},
    {"f2[4,2]", "e2[3,1]", "0", "1", "", ""},
    {"f2[4,2]", "e2[3,2]", "0", "1", "", ""},
    {"f2[4,2]", "e2[3,3]", "0", "1", "", ""},
    {"f2[4,3]", "e2[1,1]", "0", "1", "", ""},
    {"f2[4,3]", "e2[1,2]", "0", "1", "", ""},
    {"f2[4,3]", "e2[1,3]", "0", "1", "", ""},
    {"f2[4,3]", "e2[2,1]", "0", "1", "", ""},
    {"f2[4,3]", "e2[2,2]", "0", "1", "", ""},
    {"f2[4,3]", "e2[2,3]", "0", "1", "", ""},
    {"f2[4,4]", "e2[1,1]", "0", "1", "", ""},
    {"f2[4,4]", "e2[1,2]", "0", "1", "", ""},
    {"f2[4,4]", "e2[1,3]", "0", "1", "", ""},
    {"f2[4,4]", "e2[2,1]", "0", "1", "", ""},
    {"f2[4,4]", "e2[2,2]", "0", "1", "", ""},
    {"f2[4,4]", "e2[2,3]", "0", "1", "", ""},
    {"f2[4,4]", "e2[3,1]", "0", "1", "", ""},
    {"f2[4,4]", "e2[3,2]", "0", "1", "", ""},
    {"f2[4,4]", "e2[3,3]", "0", "1", "", ""},
    {"f2[1,1]", "e2[1,1]", "1", "1", "f2[1,2]", "e2[2,1]"},
    {"f2[1,2]", "e2[2,1]", "1", "1", "f2[1,3]", "e2[3,1]"},
    {"f2[1,1]", "e2[1,2]", "1", "1", "f2[1,2]", "e2[2,2]"},
    {"f2[1,2]", "e2[2,2]", "1", "1", "f2[1,3]", "e2[3,2]"},
    {"f2[1,1]", "e2[1,3]", "1", "1", "f2[1,2]", "e2[2,3]"},
    {"f2[1,2]", "e2[2,3]", "1", "1", "f2[1,3]", "e2[3,3]"},
    {"f2[2,1]", "e2[1,1]", "1", "1", "f2[2,2]", "e2[2,1]"},
    {"f2[2,2]", "e2[2,1]", "1", "1", "f2[2,3]", "e2[3,1]"},
    {"f2[2,1]", "e2[1,2]", "1", "1", "f2[2,2]", "e2[2,2]"},
    {"f2[2,2]", "e2[2,2]", "1", "1", "f2[2,3]", "e2[3,2]"},
    {"f2[2,1]", "e2[1,3]", "1", "1", "f2[2,2]", "e2[2,3]"},
    {"f2[2,2]", "e2[2,3]", "1", "1", "f2[2,3]", "e2[3,3]"},
    {"f2[3,1]", "e2[1,1]", "1", "1", "f2[3,2]", "e2[2,1]"},
    {"f2[3,2]", "e2[2,1]", "1", "1", "f2[3,3]", "e2[3,1]"},
    {"f2[3,1]", "e2[1,2]", "1", "1", "f2[3,2]", "e2[2,2]"},
    {"f2[3,2]", "e2[2,2]", "1", "1", "f2[3,3]", "e2[3,2]"},
    {"f2[3,1]", "e2[1,3]", "1", "1", "f2[3,2]", "e2[2,3]"},
    {"f2[3,2]", "e2[2,3]", "1", "1", "f2[3,3]", "e2[3,3]"},
    {"f2[4,1]", "e2[1,1]", "1", "1", "f2[4,2]", "e2[2,1]"},
    {"f2[4,2]", "e2[2,1]", "1", "1", "f2[4,3]", "e2[3,1]"},
    {"f2[4,1]", "e2[1,2]", "1", "1", "f2[4,2]", "e2[2,2]"},
    {"f2[4,2]", "e2[2,2]", "1", "1", "f2[4,3]", "e2[3,2]"},
    {"f2[4,1]", "e2[1,3]", "1", "1", "f2[4,2]", "e2[2,3]"},
    {"f2[4,2]", "e2[2,3]", "1", "1", "f2[4,3]", "e2[3,3]"},
    {"f2[1,1]", "e4[1,1]", "0", "1", "", ""},
    {"f2[1,1]", "e4[1,2]", "0", "1", "", ""},
    {"f2[1,1]", "e4[1,3]", "0", "1", "", ""},
    {"f2[1,1]", "e4[3,1]", "0", "1", "", ""},
    {"f2[1,1]", "e4[3,2]", "0", "1", "", ""},
    {"f2[1,1]", "e4[3,3]", "0", "1", "", ""},
    {"f2[1,2]", "e4[2,1]", "0", "1", "", ""},
    {"f2[1,2]", "e4[2,2]", "0", "1", "", ""},
    {"f2[1,2]", "e4[2,3]", "0", "1", "", ""},
    {"f2[1,2]", "e4[3,1]", "0", "1", "", ""},
    {"f2[1,2]", "e4[3,2]", "0", "1", "", ""},
    {"f2[1,2]", "e4[3,3]", "0", "1", "", ""},
    {"f2[1,3]", "e4[1,1]", "0", "1", "", ""},
    {"f2[1,3]", "e4[1,2]", "0", "1", "", ""},
    {"f2[1,3]", "e4[1,3]", "0", "1", "", ""},
    {"f2[1,3]", "e4[2,1]", "0", "1", "", ""},
    {"f2[1,3]", "e4[2,2]", "0", "1", "", ""},
    {"f2[1,3]", "e4[2,3]", "0", "1", "", ""},
    {"f2[1,3]", "e4[3,1]", "0", "1", "", ""},
    {"f2[1,3]", "e4[3,2]", "0", "1", "", ""},
    {"f2[1,3]", "e4[3,3]", "0", "1", "", ""},
    {"f2[1,4]", "e4[1,1]", "0", "1", "", ""},
    {"f2[1,4]", "e4[1,2]", "0", "1", "", ""},
    {"f2[1,4]", "e4[1,3]", "0", "1", "", ""},
    {"f2[1,4]", "e4[2,1]", "0", "1", "", ""},
    {"f2[1,4]", "e4[2,2]", "0", "1", "", ""},
    {"f2[1,4]", "e4[2,3]", "0", "1", "", ""},
    {"f2[2,1]", "e4[1,1]", "0", "1", "", ""},
    {"f2[2,1]", "e4[1,2]", "0", "1", "", ""},
    {"f2[2,1]", "e4[1,3]", "0", "1", "", ""},
    {"f2[2,1]", "e4[3,1]", "0", "1", "", ""},
    {"f2[2,1]", "e4[3,2]", "0", "1", "", ""},
    {"f2[2,1]", "e4[3,3]", "0", "1", "", ""},
    {"f2[2,2]", "e4[2,1]", "0", "1", "", ""},
    {"f2[2,2]", "e4[2,2]", "0", "1", "", ""},
    {"f2[2,2]", "e4[2,3]", "0", "1", "", ""},
    {"f2[2,2]", "e4[3,1]", "0", "1", "", ""},
    {"f2[2,2]", "e4[3,2]", "0", "1", "", ""},
    {"f2[2,2]", "e4[3,3]", "0", "1", "", ""},
    {"f2[2,3]", "e4[1,1]", "0", "1", "", ""},
    {"f2[2,3]", "e4[1,2]", "0", "1", "", ""},
    {"f2[2,3]", "e4[1,3]", "0", "1", "", ""},
    {"f2[2,3]", "e4[2,1]", "0", "1", "", ""},
    {"f2[2,3]", "e4[2,2]", "0", "1", "", ""},
    {"f2[2,3]", "e4[2,3]", "0", "1", "", ""},
    {"f2[2,3]", "e4[3,1]", "0", "1", "", ""},
    {"f2[2,3]", "e4[3,2]", "0", "1", "", ""},
    {"f2[2,3]", "e4[3,3]", "0", "1", "", ""},
    {"f2[2,4]", "e4[1,1]", "0", "1", "", ""},
    {"f2[2,4]", "e4[1,2]", "0", "1", "", ""},
    {"f2[2,4]", "e4[1,3]", "0", "1", "", ""},
    {"f2[2,4]", "e4[2,1]", "0", "1", "", ""},
    {"f2[2,4]", "e4[2,2]", "0", "1", "", ""},
    {"f2[2,4]", "e4[2,3]", "0", "1", "", ""},
    {"f2[3,1]", "e4[1,1]", "0", "1", "", ""},
    {"f2[3,1]", "e4[1,2]", "0", "1", "", ""},
    {"f2[3,1]", "e4[1,3]", "0", "1", "", ""},
    {"f2[3,1]", "e4[3,1]", "0", "1", "", ""},
    {"f2[3,1]", "e4[3,2]", "0", "1", "", ""},
    {"f2[3,1]", "e4[3,3]", "0", "1", "", ""},
    {"f2[3,2]", "e4[2,1]", "0", "1", "", ""},
    {"f2[3,2]", "e4[2,2]", "0", "1", "", ""},
    {"f2[3,2]", "e4[2,3]", "0", "1", "", ""},
    {"f2[3,2]", "e4[3,1]", "0", "1", "", ""},
    {"f2[3,2]", "e4[3,2]", "0", "1", "", ""},
    {"f2[3,2]", "e4[3,3]", "0", "1", "", ""},
    {"f2[3,3]", "e4[1,1]", "0", "1", "", ""},
    {"f2[3,3]", "e4[1,2]", "0", "1", "", ""},
    {"f2[3,3]", "e4[1,3]", "0", "1", "", ""},
    {"f2[3,3]", "e4[2,1]", "0", "1", "", ""},
    {"f2[3,3]", "e4[2,2]", "0", "1", "", ""},
    {"f2[3,3]", "e4[2,3]", "0", "1", "", ""},
    {"f2[3,3]", "e4[3,1]", "0", "1", "", ""},
    {"f2[3,3]", "e4[3,2]", "0", "1", "", ""},
    {"f2[3,3]", "e4[3,3]", "0", "1", "", ""},
    {"f2[3,4]", "e4[1,1]", "0", "1", "", ""},
    {"f2[3,4]", "e4[1,2]", "0", "1", "", ""},
    {"f2[3,4]", "e4[1,3]", "0", "1", "", ""},
    {"f2[3,4]", "e4[2,1]", "0", "1", "", ""},
    {"f2[3,4]", "e4[2,2]", "0", "1", "", ""},
    {"f2[3,4]", "e4[2,3]", "0", "1", "", ""},
    {"f2[4,1]", "e4[1,1]", "0", "1", "", ""},
    {"f2[4,1]", "e4[1,2]", "0", "1", "", ""},
    {"f2[4,1]", "e4[1,3]", "0", "1", "", ""},
    {"f2[4,1]", "e4[3,1]", "0", "1", "", ""},
    {"f2[4,1]", "e4[3,2]", "0", "1", "", ""},
    {"f2[4,1]", "e4[3,3]", "0", "1", "", ""},
    {"f2[4,2]", "e4[2,1]", "0", "1", "", ""},
    {"f2[4,2]", "e4[2,2]", "0", "1", "", ""},
    {"f2[4,2]", "e4[2,3]", "0", "1", "", ""},
    {"f2[4,2]", "e4[3,1]", "0", "1", "", ""},
    {"f2[4,2]", "e4[3,2]", "0", "1", "", ""},
    {"f2[4,2]", "e4[3,3]", "0", "1", "", ""},
    {"f2[4,3]", "e4[1,1]", "0", "1", "", ""},
    {"f2[4,3]", "e4[1,2]", "0", "1", "", ""},
    {"f2[4,3]", "e4[1,3]", "0", "1", "", ""},
    {"f2[4,3]", "e4[2,1]", "0", "1", "", ""},
    {"f2[4,3]", "e4[2,2]", "0", "1", "", ""},
    {"f2[4,3]", "e4[2,3]", "0", "1", "", ""},
    {"f2[4,3]", "e4[3,1]", "0", "1", "", ""},
    {"f2[4,3]", "e4[3,2]", "0", "1", "", ""},
    {"f2[4,3]", "e4[3,3]", "0", "1", "", ""},
    {"f2[4,4]", "e4[1,1]", "0", "1", "", ""},
    {"f2[4,4]", "e4[1,2]", "0", "1", "", ""},
    {"f2[4,4]", "e4[1,3]", "0", "1", "", ""},
    {"f2[4,4]", "e4[2,1]", "0", "1", "", ""},
    {"f2[4,4]", "e4[2,2]", "0", "1", "", ""},
    {"f2[4,4]", "e4[2,3]", "0", "1", "", ""},
    {"f2[1,1]", "e4[2,1]", "1", "1", "f2[1,2]", "e4[1,1]"},
    {"f2[1,2]", "e4[1,1]", "1", "1", "f2[1,4]", "e4[3,1]"},
    {"f2[1,1]", "e4[2,2]", "1", "1", "f2[1,2]", "e4[1,2]"},
    {"f2[1,2]", "e4[1,2]", "1", "1", "f2[1,4]", "e4[3,2]"},
    {"f2[1,1]", "e4[2,3]", "1", "1", "f2[1,2]", "e4[1,3]"},
    {"f2[1,2]", "e4[1,3]", "1", "1", "f2[1,4]", "e4[3,3]"},
    {"f2[2,1]", "e4[2,1]", "1", "1", "f2[2,2]", "e4[1,1]"},
    {"f2[2,2]", "e4[1,1]", "1", "1", "f2[2,4]", "e4[3,1]"},
    {"f2[2,1]", "e4[2,2]", "1", "1", "f2[2,2]", "e4[1,2]"},
    {"f2[2,2]", "e4[1,2]", "1", "1", "f2[2,4]", "e4[3,2]"},
    {"f2[2,1]", "e4[2,3]", "1", "1", "f2[2,2]", "e4[1,3]"},
    {"f2[2,2]", "e4[1,3]", "1", "1", "f2[2,4]", "e4[3,3]"},
    {"f2[3,1]", "e4[2,1]", "1", "1", "f2[3,2]", "e4[1,1]"},
    {"f2[3,2]", "e4[1,1]", "1", "1", "f2[3,4]", "e4[3,1]"},
    {"f2[3,1]", "e4[2,2]", "1", "1", "f2[3,2]", "e4[1,2]"},
    {"f2[3,2]", "e4[1,2]", "1", "1", "f2[3,4]", "e4[3,2]"},
    {"f2[3,1]", "e4[2,3]", "1", "1", "f2[3,2]", "e4[1,3]"},
    {"f2[3,2]", "e4[1,3]", "1", "1", "f2[3,4]", "e4[3,3]"},
    {"f2[4,1]", "e4[2,1]", "1", "1", "f2[4,2]", "e4[1,1]"},
    {"f2[4,2]", "e4[1,1]", "1", "1", "f2[4,4]", "e4[3,1]"},
    {"f2[4,1]", "e4[2,2]", "1", "1", "f2[4,2]", "e4[1,2]"},
    {"f2[4,2]", "e4[1,2]", "1", "1", "f2[4,4]", "e4[3,2]"},
    {"f2[4,1]", "e4[2,3]", "1", "1", "f2[4,2]", "e4[1,3]"},
    {"f2[4,2]", "e4[1,3]", "1", "1", "f2[4,4]", "e4[3,3]"},
    {"f2[1,1]", "e3[2,1]", "0", "1", "", ""},
    {"f2[1,2]", "e3[1,1]", "0", "1", "", ""},
    {"f2[1,1]", "e3[2,2]", "0", "1", "", ""},
    {"f2[1,2]", "e3[1,2]", "0", "1", "", ""},
    {"f2[2,1]", "e3[2,1]", "0", "1", "", ""},
    {"f2[2,2]", "e3[1,1]", "0", "1", "", ""},
    {"f2[2,1]", "e3[2,2]", "0", "1", "", ""},
    {"f2[2,2]", "e3[1,2]", "0", "1", "", ""},
    {"f2[3,1]", "e3[2,1]", "0", "1", "", ""},
    {"f2[3,2]", "e3[1,1]", "0", "1", "", ""},
    {"f2[3,1]", "e3[2,2]", "0", "1", "", ""},
    {"f2[3,2]", "e3[1,2]", "0", "1", "", ""},
    {"f2[4,1]", "e3[2,1]", "0", "1", "", ""},
    {"f2[4,2]", "e3[1,1]", "0", "1", "", ""},
    {"f2[4,1]", "e3[2,2]", "0", "1", "", ""},
    {"f2[4,2]", "e3[1,2]", "0", "1", "", ""},
    {"f2[1,1]", "e3[1,1]", "1", "1", "f2[1,2]", "e3[2,1]"},
    {"f2[1,2]", "e3[2,1]", "1", "1", "f2[1,3]", "e3[1,1]"},
    {"f2[1,3]", "e3[1,1]", "1", "1", "f2[1,3]", "e3[2,1]"},
    {"f2[1,3]", "e3[2,1]", "1", "1", "f2[1,4]", "e3[1,1]"},
    {"f2[1,4]", "e3[1,1]", "1", "lambda", "f2[1,4]", "e3[2,1]"},
    {"f2[1,1]", "e3[1,2]", "1", "1", "f2[1,2]", "e3[2,2]"},
    {"f2[1,2]", "e3[2,2]", "1", "1", "f2[1,3]", "e3[1,2]"},
    {"f2[1,3]", "e3[1,2]", "1", "1", "f2[1,3]", "e3[2,2]"},
    {"f2[1,3]", "e3[2,2]", "1", "1", "f2[1,4]", "e3[1,2]"},
    {"f2[1,4]", "e3[1,2]", "1", "lambda", "f2[1,4]", "e3[2,2]"},
    {"f2[2,1]", "e3[1,1]", "1", "1", "f2[2,2]", "e3[2,1]"},
    {"f2[2,2]", "e3[2,1]", "1", "1", "f2[2,3]", "e3[1,1]"},
    {"f2[2,3]", "e3[1,1]", "1", "1", "f2[2,3]", "e3[2,1]"},
    {"f2[2,3]", "e3[2,1]", "1", "1", "f2[2,4]", "e3[1,1]"},
    {"f2[2,4]", "e3[1,1]", "1", "lambda", "f2[2,4]", "e3[2,1]"},
    {"f2[2,1]", "e3[1,2]", "1", "1", "f2[2,2]", "e3[2,2]"},
    {"f2[2,2]", "e3[2,2]", "1", "1", "f2[2,3]", "e3[1,2]"},
    {"f2[2,3]", "e3[1,2]", "1", "1", "f2[2,3]", "e3[2,2]"},
    {"f2[2,3]", "e3[2,2]", "1", "1", "f2[2,4]", "e3[1,2]"},
    {"f2[2,4]", "e3[1,2]", "1", "lambda", "f2[2,4]", "e3[2,2]"},
    {"f2[3,1]", "e3[1,1]", "1", "1", "f2[3,2]", "e3[2,1]"},
    {"f2[3,2]", "e3[2,1]", "1", "1", "f2[3,3]", "e3[1,1]"},
    {"f2[3,3]", "e3[1,1]", "1", "1", "f2[3,3]", "e3[2,1]"},
    {"f2[3,3]", "e3[2,1]", "1", "1", "f2[3,4]", "e3[1,1]"},
    {"f2[3,4]", "e3[1,1]", "1", "lambda", "f2[3,4]", "e3[2,1]"},
    {"f2[3,1]", "e3[1,2]", "1", "1", "f2[3,2]", "e3[2,2]"},
    {"f2[3,2]", "e3[2,2]", "1", "1", "f2[3,3]", "e3[1,2]"},
    {"f2[3,3]", "e3[1,2]", "1", "1", "f2[3,3]", "e3[2,2]"},
    {"f2[3,3]", "e3[2,2]", "1", "1", "f2[3,4]", "e3[1,2]"},
    {"f2[3,4]", "e3[1,2]", "1", "lambda", "f2[3,4]", "e3[2,2]"},
    {"f2[4,1]", "e3[1,1]", "1", "1", "f2[4,2]", "e3[2,1]"},
    {"f2[4,2]", "e3[2,1]", "1", "1", "f2[4,3]", "e3[1,1]"},
    {"f2[4,3]", "e3[1,1]", "1", "1", "f2[4,3]", "e3[2,1]"},
    {"f2[4,3]", "e3[2,1]", "1", "1", "f2[4,4]", "e3[1,1]"},
    {"f2[4,4]", "e3[1,1]", "1", "lambda", "f2[4,4]", "e3[2,1]"},
    {"f2[4,1]", "e3[1,2]", "1", "1", "f2[4,2]", "e3[2,2]"},
    {"f2[4,2]", "e3[2,2]", "1", "1", "f2[4,3]", "e3[1,2]"},
    {"f2[4,3]", "e3[1,2]", "1", "1", "f2[4,3]", "e3[2,2]"},
    {"f2[4,3]", "e3[2,2]", "1", "1", "f2[4,4]", "e3[1,2]"},
    {"f2[4,4]", "e3[1,2]", "1", "lambda", "f2[4,4]", "e3[2,2]"},
};

const RTermRow kRTerms[] = {
    {"lambda^2 - lambda", "1", "e2[1,2]", "f2[4,1]"},
    {"lambda^2 - lambda", "1", "e2[3,2]", "f2[4,3]"},
    {"lambda^2 - lambda", "1", "e2[2,2]", "f2[4,2]"},
    {"-lambda^2 + lambda", "1", "e4[3,1]", "f2[4,4]"},
    {"lambda + 1", "1", "e5", "f3[2,2]"},
    {"lambda + 1", "1", "e3[2,2]", "f1[1,1]"},
    {"lambda + 1", "1", "e5", "f1[1,1]"},
    {"lambda + 1", "1", "e2[2,2]", "f1[1,1]"},
    {"lambda + 1", "1", "e5", "f2[1,1]"},
    {"lambda + 1", "1", "e3[2,2]", "f2[1,1]"},
    {"lambda + 1", "1", "e4[1,1]", "f2[1,1]"},
    {"lambda + 1", "1", "e4[1,1]", "f1[1,1]"},
    {"lambda + 1", "1", "e2[2,2]", "f2[1,1]"},
    {"lambda + 1", "1", "e3[2,2]", "f3[2,2]"},
    {"lambda + 1", "1", "e4[1,1]", "f3[2,2]"},
    {"lambda + 1", "1", "e2[2,2]", "f3[2,2]"},
    {"lambda - 1", "1", "e4[1,2]", "f2[3,2]"},
    {"lambda - 1", "1", "e4[2,2]", "f2[3,1]"},
    {"lambda - 1", "1", "e4[3,2]", "f2[3,4]"},
    {"-lambda + 1", "1", "e2[3,1]", "f2[3,3]"},
    {"lambda", "1", "e2[2,2]", "f1[1,2]"},
    {"-lambda", "1", "e2[2,3]", "f1[1,2]"},
    {"lambda", "1", "e2[1,1]", "f1[1,1]"},
    {"lambda", "1", "e4[1,1]", "f2[1,2]"},
    {"lambda", "1", "e4[1,2]", "f2[1,2]"},
    {"lambda", "1", "e5", "f2[1,2]"},
    {"lambda", "1", "e4[3,1]", "f2[1,4]"},
    {"lambda", "1", "e4[3,2]", "f2[1,4]"},
    {"lambda", "1", "e4[1,1]", "f1[1,2]"},
    {"lambda", "1", "e4[1,2]", "f1[1,2]"},
    {"lambda", "1", "e2[2,2]", "f3[1,1]"},
    {"lambda", "1", "e2[2,2]", "f2[2,2]"},
    {"-lambda", "1", "e4[3,1]", "f2[2,4]"},
    {"lambda", "1", "e5", "f1[1,2]"},
    {"lambda", "1", "e4[1,1]", "f3[1,1]"},
    {"-lambda", "1", "e2[1,3]", "f1[1,1]"},
    {"-lambda", "1", "e3[1,2]", "f1[1,1]"},
    {"lambda", "1", "e4[3,3]", "f2[1,1]"},
    {"lambda", "1", "e4[2,2]", "f1[1,1]"},
    {"lambda", "1", "e4[3,3]", "f1[1,1]"},
    {"lambda", "1", "e2[3,2]", "f2[2,3]"},
    {"-lambda", "1", "e2[1,2]", "f2[1,1]"},
    {"lambda", "1", "e5", "f3[2,1]"},
    {"-lambda", "1", "e2[3,1]", "f2[1,3]"},
    {"-lambda", "1", "e3[1,2]", "f2[1,1]"},
    {"-lambda", "1", "e2[3,2]", "f2[1,3]"},
    {"lambda", "1", "e2[3,3]", "f2[1,3]"},
    {"lambda", "1", "e2[1,2]", "f3[1,2]"},
    {"lambda", "1", "e4[2,2]", "f2[1,1]"},
    {"lambda", "1", "e2[2,2]", "f2[3,3]"},
    {"lambda", "1", "e2[3,3]", "f2[3,3]"},
    {"lambda", "1", "e2[1,2]", "f2[2,1]"},
    {"lambda", "1", "e3[2,2]", "f2[3,3]"},
    {"lambda", "1", "e4[1,1]", "f2[3,3]"},
    {"-lambda", "1", "e2[1,2]", "f3[2,2]"},
    {"lambda", "1", "e4[3,3]", "f2[4,4]"},
    {"lambda", "1", "e2[2,1]", "f1[1,2]"},
    {"lambda", "1", "e4[2,1]", "f3[1,2]"},
    {"-lambda", "1", "e3[1,2]", "f3[2,2]"},
    {"-lambda", "1", "e4[2,1]", "f3[2,2]"},
    {"lambda", "1", "e4[3,3]", "f2[3,3]"},
    {"lambda", "1", "e5", "f2[3,3]"},
    {"lambda", "1", "e4[3,3]", "f3[2,2]"},
    {"1", "1", "e2[2,1]", "f2[1,1]"},
    {"-1", "1", "e2[1,1]", "f1[2,1]"},
    {"-1", "1", "e2[2,2]", "f1[2,1]"},
    {"1", "1", "e2[3,3]", "f2[1,1]"},
    {"1", "1", "e3[2,1]", "f2[1,1]"},
    {"1", "1", "e4[1,2]", "f2[1,1]"},
    {"-1", "1", "e2[2,2]", "f3[1,2]"},
    {"-1", "1", "e2[2,2]", "f2[2,1]"},
    {"-1", "1", "e2[3,3]", "f3[1,2]"},
    {"-1", "1", "e3[1,1]", "f3[1,2]"},
    {"-1", "1", "e3[2,2]", "f3[1,2]"},
    {"-1", "1", "e4[1,1]", "f3[1,2]"},
    {"1", "1", "e2[2,1]", "f2[3,3]"},
    {"1", "1", "e3[2,1]", "f2[3,3]"},
    {"-1", "1", "e2[3,3]", "f1[2,1]"},
    {"-1", "1", "e3[1,1]", "f1[2,1]"},
    {"-1", "1", "e3[2,2]", "f1[2,1]"},
    {"-1", "1", "e4[1,1]", "f1[2,1]"},
    {"-1", "1", "e2[3,3]", "f2[2,1]"},
    {"-1", "1", "e3[1,1]", "f2[2,1]"},
    {"-1", "1", "e3[2,2]", "f2[2,1]"},
    {"-1", "1", "e4[1,1]", "f2[2,1]"},
    {"-1", "1", "e4[2,3]", "f3[1,2]"},
    {"-1", "1", "e4[3,3]", "f3[1,2]"},
    {"-1", "1", "e5", "f3[1,2]"},
    {"1", "1", "e2[2,1]", "f3[2,2]"},
    {"1", "1", "e5", "f2[4,4]"},
    {"1", "1", "e2[2,1]", "f3[1,1]"},
    {"-1", "1", "e4[2,2]", "f2[2,1]"},
    {"-1", "1", "e4[3,3]", "f2[2,1]"},
    {"-1", "1", "e5", "f2[2,1]"},
    {"-1", "1", "e4[2,2]", "f1[2,1]"},
    {"-1", "1", "e4[3,3]", "f1[2,1]"},
    {"-1", "1", "e5", "f1[2,1]"},
    {"1", "1", "e4[1,2]", "f2[3,3]"},
    {"1", "1", "e2[3,3]", "f3[2,2]"},
    {"1", "1", "e3[2,1]", "f3[2,2]"},
    {"1", "1", "e4[1,2]", "f3[2,2]"},
    {"1", "1", "e2[3,3]", "f2[4,4]"},
    {"1", "1", "e3[2,1]", "f2[4,4]"},
    {"1", "1", "e3[2,2]", "f2[4,4]"},
    {"1", "1", "e4[1,1]", "f2[4,4]"},
    {"1", "1", "e4[1,2]", "f2[4,4]"},
    {"1", "1", "e4[1,2]", "f3[1,1]"},
    {"-1", "1", "e4[1,3]", "f3[1,1]"},
    {"1", "1", "e2[2,1]", "f2[2,2]"},
    {"1", "1", "e2[2,1]", "f1[1,1]"},
    {"1", "1", "e2[3,3]", "f1[1,1]"},
    {"-1", "1", "e4[3,2]", "f2[2,4]"},
    {"1", "1", "e4[3,3]", "f2[2,4]"},
    {"1", "1", "e2[2,1]", "f2[4,4]"},
    {"1", "1", "e2[2,2]", "f2[4,4]"},
    {"1", "1", "e2[3,1]", "f2[2,3]"},
    {"1", "1", "e3[2,1]", "f1[1,1]"},
    {"1", "1", "e4[1,2]", "f1[1,1]"},
    {"1", "1", "f1[2,1] e1", ""},
};

const PEntry kPEntries[] = {
    {"e1", "f1[1,1]", "1", "1"},
    {"e5", "f3[1,1]", "1", "1"},
    {"e2[1,1]", "f1[1,1]", "1", "1"},
    {"e2[1,1]", "f2[1,1]", "1", "1"},
    {"e2[1,2]", "f1[1,2]", "1", "1"},
    {"e2[1,2]", "f2[1,2]", "1", "1"},
    {"e2[1,3]", "f2[1,3]", "1", "1"},
    {"e2[3,1]", "f2[3,1]", "1", "1"},
    {"e2[2,1]", "f1[2,1]", "1", "1"},
    {"e2[2,1]", "f2[2,1]", "1", "1"},
    {"e2[2,2]", "f1[2,2]", "1", "1"},
    {"e2[2,2]", "f2[2,2]", "1", "1"},
    {"e2[2,3]", "f2[2,3]", "1", "1"},
    {"e2[3,2]", "f2[3,2]", "1", "1"},
    {"e2[3,3]", "f2[3,3]", "1", "1"},
    {"e4[1,1]", "f3[1,1]", "1", "1"},
    {"e4[1,1]", "f2[2,2]", "1", "1"},
    {"e4[1,2]", "f3[1,2]", "1", "1"},
    {"e4[1,2]", "f2[2,1]", "1", "1"},
    {"e4[1,3]", "f2[2,4]", "1", "1"},
    {"e4[3,1]", "f2[4,2]", "1", "1"},
    {"e4[2,1]", "f3[2,1]", "1", "1"},
    {"e4[2,1]", "f2[1,2]", "1", "1"},
    {"e4[2,2]", "f3[2,2]", "1", "1"},
    {"e4[2,2]", "f2[1,1]", "1", "1"},
    {"e4[2,3]", "f2[1,4]", "1", "1"},
    {"e4[3,2]", "f2[4,1]", "1", "1"},
    {"e4[3,3]", "f2[4,4]", "1", "1"},
    {"e3[1,1]", "f2[1,1]", "1", "1"},
    {"e3[1,1]", "f2[1,3]", "1", "1"},
    {"e3[1,1]", "f2[3,1]", "1", "1"},
    {"e3[1,1]", "f2[3,3]", "1", "1"},
    {"e3[1,1]", "f2[1,4]", "1", "1"},
    {"e3[1,1]", "f2[3,4]", "1", "1"},
    {"e3[1,1]", "f2[4,1]", "1", "1"},
    {"e3[1,1]", "f2[4,3]", "1", "1"},
    {"e3[1,1]", "f2[4,4]", "1", "1"},
    {"e3[1,2]", "f2[1,2]", "1", "1"},
    {"e3[1,2]", "f2[1,3]", "1", "1"},
    {"e3[1,2]", "f2[3,2]", "1", "1"},
    {"e3[1,2]", "f2[3,3]", "1", "1"},
    {"e3[1,2]", "f2[4,2]", "1", "1"},
    {"e3[1,2]", "f2[4,3]", "1", "1"},
    {"e3[1,2]", "f2[1,4]", "t", "1"},
    {"e3[1,2]", "f2[3,4]", "t", "1"},
    {"e3[1,2]", "f2[4,4]", "t", "1"},
    {"e3[2,1]", "f2[2,1]", "1", "1"},
    {"e3[2,1]", "f2[2,3]", "1", "1"},
    {"e3[2,1]", "f2[2,4]", "1", "1"},
    {"e3[2,1]", "f2[3,1]", "1", "1"},
    {"e3[2,1]", "f2[3,3]", "1", "1"},
    {"e3[2,1]", "f2[3,4]", "1", "1"},
    {"e3[2,1]", "f2[4,1]", "lambda", "1"},
    {"e3[2,1]", "f2[4,3]", "lambda", "1"},
    {"e3[2,1]", "f2[4,4]", "lambda", "1"},
    {"e3[2,2]", "f2[2,2]", "1", "1"},
    {"e3[2,2]", "f2[2,3]", "1", "1"},
    {"e3[2,2]", "f2[3,2]", "1", "1"},
    {"e3[2,2]", "f2[3,3]", "1", "1"},
    {"e3[2,2]", "f2[4,2]", "lambda", "1"},
    {"e3[2,2]", "f2[4,3]", "lambda", "1"},
    {"e3[2,2]", "f2[2,4]", "t", "1"},
    {"e3[2,2]", "f2[3,4]", "t", "1"},
    {"e3[2,2]", "f2[4,4]", "lambda*t", "1"},
};

}  // namespace

const FamilyData kE7{
    kABlocks, sizeof(kABlocks) / sizeof(kABlocks[0]),
    kBBlocks, sizeof(kBBlocks) / sizeof(kBBlocks[0]),
    kRels, sizeof(kRels) / sizeof(kRels[0]),
    kRTerms, sizeof(kRTerms) / sizeof(kRTerms[0]),
    kPEntries, sizeof(kPEntries) / sizeof(kPEntries[0]),
    "lambda*t - lambda", "t - lambda",
};

}  // namespace pencil::fdata
