
def step_64(cfg):
    v0_s64 = []
    for v1_s64 in range(len(v2_s64)):
        v3_s64 = v2_s64[v1_s64]
        if v4_s64(v3_s64):
            v0_s64.append(v3_s64)
    return cfg

def step_295(cfg):
    v0_s295 = []
    for v1_s295 in range(len(v2_s295)):
        v3_s295 = v2_s295[v1_s295]
        if v4_s295(v3_s295):
            v0_s295.append(v3_s295)
    return cfg

def step_526(cfg):
    v0_s526 = []
    for v1_s526 in range(len(v2_s526)):
        v3_s526 = v2_s526[v1_s526]
        if v4_s526(v3_s526):
            v0_s526.append(v3_s526)
    return cfg

def step_757(cfg):
    v0_s757 = []
    for v1_s757 in range(len(v2_s757)):
        v3_s757 = v2_s757[v1_s757]
        if v4_s757(v3_s757):
            v0_s757.append(v3_s757)
    return cfg

def step_77(cfg):
    v0_s77 = []
    for v1_s77 in range(len(v2_s77)):
        if v3_s77(v2_s77[v1_s77]):
            v0_s77 += [v2_s77[v1_s77]]
    return cfg

def step_308(cfg):
    v0_s308 = []
    for v1_s308 in range(len(v2_s308)):
        if v3_s308(v2_s308[v1_s308]):
            v0_s308 += [v2_s308[v1_s308]]
    return cfg

def step_539(cfg):
    v0_s539 = []
    for v1_s539 in range(len(v2_s539)):
        if v3_s539(v2_s539[v1_s539]):
            v0_s539 += [v2_s539[v1_s539]]
    return cfg

def step_770(cfg):
    v0_s770 = []
    for v1_s770 in range(len(v2_s770)):
        if v3_s770(v2_s770[v1_s770]):
            v0_s770 += [v2_s770[v1_s770]]
    return cfg

def step_90(cfg):
    v0_s90 = []
    for v1_s90 in range(len(v2_s90)):
        if v3_s90(v2_s90[v1_s90]):
            v0_s90 = v0_s90 + [v2_s90[v1_s90]]
    return cfg

def step_321(cfg):
    v0_s321 = []
    for v1_s321 in range(len(v2_s321)):
        if v3_s321(v2_s321[v1_s321]):
            v0_s321 = v0_s321 + [v2_s321[v1_s321]]
    return cfg

def step_552(cfg):
    v0_s552 = []
    for v1_s552 in range(len(v2_s552)):
        if v3_s552(v2_s552[v1_s552]):
            v0_s552 = v0_s552 + [v2_s552[v1_s552]]
    return cfg

def step_783(cfg):
    v0_s783 = []
    for v1_s783 in range(len(v2_s783)):
        if v3_s783(v2_s783[v1_s783]):
            v0_s783 = v0_s783 + [v2_s783[v1_s783]]
    return cfg
