#include "bci/limits.hpp"

namespace bci {

Limits& limits() {
    static Limits instance;
    return instance;
}

} // namespace bci
