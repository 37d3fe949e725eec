#include "iashare/fixtures.hpp"

#include "iashare/error.hpp"

namespace iashare::fixtures {

std::span<const ReferenceRow> reference_table(int year, Sex sex)
{
    if (year == 2022) {
        switch (sex) {
        case Sex::Total: return kTotal2022;
        case Sex::Female: return kFemale2022;
        case Sex::Male: return kMale2022;
        }
    }
    if (year == 2021) {
        switch (sex) {
        case Sex::Total: return kTotal2021;
        case Sex::Female: return kFemale2021;
        case Sex::Male: return kMale2021;
        }
    }
    fail(ErrorKind::InvalidArgument,
         "no embedded reference table for year " + std::to_string(year));
}

} // namespace iashare::fixtures
