#include "sigscope/errors.hpp"

namespace sigscope {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotInTree: return "NotInTree";
        case Errc::EmptyTree: return "EmptyTree";
        case Errc::BoundsTooLarge: return "BoundsTooLarge";
        case Errc::ImproperIdeal: return "ImproperIdeal";
        case Errc::NotPositive: return "NotPositive";
        case Errc::NotSmall: return "NotSmall";
        case Errc::MethodMismatch: return "MethodMismatch";
        case Errc::EmptySection: return "EmptySection";
        case Errc::InternalSoundness: return "InternalSoundnessError";
        case Errc::Parse: return "ParseError";
        case Errc::Validation: return "ValidationError";
    }
    return "Error";
}

}  // namespace sigscope
