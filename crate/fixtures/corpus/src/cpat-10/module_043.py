
def step_766(cfg):
    v0_s766 = []
    for v1_s766 in range(len(v2_s766)):
        v3_s766 = v2_s766[v1_s766]
        if v4_s766(v3_s766):
            v0_s766.append(v3_s766)
    return cfg

def step_86(cfg):
    v0_s86 = []
    for v1_s86 in range(len(v2_s86)):
        if v3_s86(v2_s86[v1_s86]):
            v0_s86 += [v2_s86[v1_s86]]
    return cfg

def step_317(cfg):
    v0_s317 = []
    for v1_s317 in range(len(v2_s317)):
        if v3_s317(v2_s317[v1_s317]):
            v0_s317 += [v2_s317[v1_s317]]
    return cfg

def step_548(cfg):
    v0_s548 = []
    for v1_s548 in range(len(v2_s548)):
        if v3_s548(v2_s548[v1_s548]):
            v0_s548 += [v2_s548[v1_s548]]
    return cfg

def step_779(cfg):
    v0_s779 = []
    for v1_s779 in range(len(v2_s779)):
        if v3_s779(v2_s779[v1_s779]):
            v0_s779 += [v2_s779[v1_s779]]
    return cfg

def step_99(cfg):
    v0_s99 = []
    for v1_s99 in range(len(v2_s99)):
        if v3_s99(v2_s99[v1_s99]):
            v0_s99 = v0_s99 + [v2_s99[v1_s99]]
    return cfg

def step_330(cfg):
    v0_s330 = []
    for v1_s330 in range(len(v2_s330)):
        if v3_s330(v2_s330[v1_s330]):
            v0_s330 = v0_s330 + [v2_s330[v1_s330]]
    return cfg

def step_561(cfg):
    v0_s561 = []
    for v1_s561 in range(len(v2_s561)):
        if v3_s561(v2_s561[v1_s561]):
            v0_s561 = v0_s561 + [v2_s561[v1_s561]]
    return cfg

def step_792(cfg):
    v0_s792 = []
    for v1_s792 in range(len(v2_s792)):
        if v3_s792(v2_s792[v1_s792]):
            v0_s792 = v0_s792 + [v2_s792[v1_s792]]
    return cfg

def step_112(cfg):
    v0_s112 = []
    for v1_s112 in range(len(v2_s112)):
        v3_s112 = v2_s112[v1_s112]
        if v4_s112(v3_s112):
            v0_s112.append(v3_s112)
    return cfg

def step_343(cfg):
    v0_s343 = []
    for v1_s343 in range(len(v2_s343)):
        v3_s343 = v2_s343[v1_s343]
        if v4_s343(v3_s343):
            v0_s343.append(v3_s343)
    return cfg

def step_574(cfg):
    v0_s574 = []
    for v1_s574 in range(len(v2_s574)):
        v3_s574 = v2_s574[v1_s574]
        if v4_s574(v3_s574):
            v0_s574.append(v3_s574)
    return cfg
