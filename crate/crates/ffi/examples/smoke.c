#include <stdio.h>
#include "hzbounds.h"

int main(void) {
    HzRootSystem *rs = NULL;
    HzBounds *b = NULL;
    char *lo = NULL, *up = NULL;
    if (hz_root_system_new("C", 3, &rs) != HZ_STATUS_OK) {
        fprintf(stderr, "%s\n", hz_last_error());
        return 1;
    }
    if (hz_bounds_compute(rs, "3,2,1", 0, &b) != HZ_STATUS_OK) {
        fprintf(stderr, "%s\n", hz_last_error());
        hz_root_system_free(rs);
        return 1;
    }
    hz_bounds_lower(b, &lo);
    hz_bounds_upper(b, &up);
    printf("C3 (3,2,1): lower %s upper %s\n", lo, up);
    hz_string_free(lo);
    hz_string_free(up);
    hz_bounds_free(b);
    hz_root_system_free(rs);
    return 0;
}
