#ifndef QTCOMB_QTCOMB_H
#define QTCOMB_QTCOMB_H

/*
 * C interface to the exact qt-combinatorics core.
 *
 * All numeric I/O is exact: rationals travel as strings "p/q" (or "p"),
 * partitions as comma-separated weakly decreasing parts ("3,1"; "" or "0" is
 * the empty partition), vectors as comma-separated entries.  Strings returned
 * through char** are allocated by the library and must be released with
 * qtc_string_free.
 *
 * An evaluator is immutable after creation and may be shared across threads;
 * the last-error buffer is thread-local.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qtc_status {
    QTC_OK = 0,
    QTC_VERIFY_FAILED = 1, /* a verification suite found a counterexample */
    QTC_ERR_USAGE = 2,     /* malformed input or a broken precondition */
    QTC_ERR_SINGULAR = 3,  /* a denominator factor vanished at the point */
    QTC_ERR_INTERNAL = 4
} qtc_status;

/* Evaluation point (q, t); q and t must be nonzero. */
typedef struct qtc_evaluator qtc_evaluator;

qtc_status qtc_evaluator_new(const char* q, const char* t, qtc_evaluator** out);
void qtc_evaluator_free(qtc_evaluator* ev);

/*
 * Routes name the two independent evaluation paths: "algebraic" runs the
 * product/recurrence formulas, "combinatorial" the tableau sums.  They
 * compute the same value; keeping them separate is what lets callers
 * cross-check one against the other.
 */

/* Weight of one horizontal strip lam/mu. */
qtc_status qtc_psi(const qtc_evaluator* ev, const char* lam, const char* mu,
                   const char* route, char** out);

/* w function at explicit variables z (rationals; their count sets the
 * dimension).  mu is the optional inner shape; the combinatorial route
 * supports a nonempty mu only for a single variable. */
qtc_status qtc_w(const qtc_evaluator* ev, const char* z, const char* lam,
                 const char* mu, const char* route, char** out);

/* Four-parameter layer over n ambient variables; recurrence only. */
qtc_status qtc_w_poised(const qtc_evaluator* ev, const char* z, const char* lam,
                        const char* mu, const char* a, const char* b, int n,
                        char** out);

/* Generalized binomial at integer exponents z (length n). */
qtc_status qtc_binom(const qtc_evaluator* ev, const char* z, const char* mu,
                     int n, const char* route, char** out);

/* Bracket at integer exponents z with scale factors s (rationals; pass NULL
 * or "" for all ones). */
qtc_status qtc_bracket(const qtc_evaluator* ev, const char* z, const char* s,
                       const char* mu, int n, const char* route, char** out);

/* Catalan value of an n-part shape. */
qtc_status qtc_catalan(const qtc_evaluator* ev, const char* lam, int n,
                       const char* route, char** out);

/* Lah connection coefficient of mu inside lam. */
qtc_status qtc_lah(const qtc_evaluator* ev, const char* lam, const char* mu,
                   int n, const char* route, char** out);

/* Runs a verification suite ("all", "w", "binom", "bracket", "catalan",
 * "lah", "lemmas") over shapes of weight <= max_weight with up to max_n
 * variables and `trials` random points per grid cell, and writes a JSON
 * report.  Returns QTC_OK when every check passes, QTC_VERIFY_FAILED when a
 * counterexample was found.  Fixed seed implies an identical report. */
qtc_status qtc_verify(const char* suite, long max_weight, int max_n, int trials,
                      unsigned long long seed, char** report_json);

/* Last error on this thread as JSON: {"code", "name", "message"}, plus
 * {"factor": {"text", "q_exp", "t_exp"}} when a denominator vanished.  Owned
 * by the library; valid until the next failing call on the same thread. */
const char* qtc_last_error(void);

void qtc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
