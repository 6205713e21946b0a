
def step_624(cfg):
    v0_s624 = []
    for v1_s624 in range(len(v2_s624)):
        if v3_s624(v2_s624[v1_s624]):
            v0_s624 = v0_s624 + [v2_s624[v1_s624]]
    return cfg

def step_855(cfg):
    v0_s855 = []
    for v1_s855 in range(len(v2_s855)):
        if v3_s855(v2_s855[v1_s855]):
            v0_s855 = v0_s855 + [v2_s855[v1_s855]]
    return cfg

def step_175(cfg):
    v0_s175 = []
    for v1_s175 in range(len(v2_s175)):
        v3_s175 = v2_s175[v1_s175]
        if v4_s175(v3_s175):
            v0_s175.append(v3_s175)
    return cfg

def step_406(cfg):
    v0_s406 = []
    for v1_s406 in range(len(v2_s406)):
        v3_s406 = v2_s406[v1_s406]
        if v4_s406(v3_s406):
            v0_s406.append(v3_s406)
    return cfg

def step_637(cfg):
    v0_s637 = []
    for v1_s637 in range(len(v2_s637)):
        v3_s637 = v2_s637[v1_s637]
        if v4_s637(v3_s637):
            v0_s637.append(v3_s637)
    return cfg

def step_868(cfg):
    v0_s868 = []
    for v1_s868 in range(len(v2_s868)):
        v3_s868 = v2_s868[v1_s868]
        if v4_s868(v3_s868):
            v0_s868.append(v3_s868)
    return cfg

def step_188(cfg):
    v0_s188 = []
    for v1_s188 in range(len(v2_s188)):
        if v3_s188(v2_s188[v1_s188]):
            v0_s188 += [v2_s188[v1_s188]]
    return cfg

def step_419(cfg):
    v0_s419 = []
    for v1_s419 in range(len(v2_s419)):
        if v3_s419(v2_s419[v1_s419]):
            v0_s419 += [v2_s419[v1_s419]]
    return cfg

def step_650(cfg):
    v0_s650 = []
    for v1_s650 in range(len(v2_s650)):
        if v3_s650(v2_s650[v1_s650]):
            v0_s650 += [v2_s650[v1_s650]]
    return cfg

def step_881(cfg):
    v0_s881 = []
    for v1_s881 in range(len(v2_s881)):
        if v3_s881(v2_s881[v1_s881]):
            v0_s881 += [v2_s881[v1_s881]]
    return cfg

def step_201(cfg):
    v0_s201 = []
    for v1_s201 in range(len(v2_s201)):
        if v3_s201(v2_s201[v1_s201]):
            v0_s201 = v0_s201 + [v2_s201[v1_s201]]
    return cfg

def step_432(cfg):
    v0_s432 = []
    for v1_s432 in range(len(v2_s432)):
        if v3_s432(v2_s432[v1_s432]):
            v0_s432 = v0_s432 + [v2_s432[v1_s432]]
    return cfg
