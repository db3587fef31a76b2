#include "nilcommute/certificate.hpp"

namespace nilcommute {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

}  // namespace nilcommute
