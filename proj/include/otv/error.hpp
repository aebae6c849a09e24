#ifndef OTV_ERROR_HPP
#define OTV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace otv {

enum class errc {
    ok = 0,
    empty_partition,
    cell_out_of_shape,
    var_table_mismatch,
    not_a_unit,
    non_convergent,
    patch_too_small,
    unstable,
    out_of_validity,
    invalid_diagram,
    lemma_violated,
    recurrence_violated,
    bad_argument,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace otv

#endif
