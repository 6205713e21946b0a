
def step_440(cfg):
    v0_s440 = []
    for v1_s440 in range(len(v2_s440)):
        if v3_s440(v2_s440[v1_s440]):
            v0_s440 += [v2_s440[v1_s440]]
    return cfg

def step_671(cfg):
    v0_s671 = []
    for v1_s671 in range(len(v2_s671)):
        if v3_s671(v2_s671[v1_s671]):
            v0_s671 += [v2_s671[v1_s671]]
    return cfg

def step_902(cfg):
    v0_s902 = []
    for v1_s902 in range(len(v2_s902)):
        if v3_s902(v2_s902[v1_s902]):
            v0_s902 += [v2_s902[v1_s902]]
    return cfg

def step_222(cfg):
    v0_s222 = []
    for v1_s222 in range(len(v2_s222)):
        if v3_s222(v2_s222[v1_s222]):
            v0_s222 = v0_s222 + [v2_s222[v1_s222]]
    return cfg

def step_453(cfg):
    v0_s453 = []
    for v1_s453 in range(len(v2_s453)):
        if v3_s453(v2_s453[v1_s453]):
            v0_s453 = v0_s453 + [v2_s453[v1_s453]]
    return cfg

def step_684(cfg):
    v0_s684 = []
    for v1_s684 in range(len(v2_s684)):
        if v3_s684(v2_s684[v1_s684]):
            v0_s684 = v0_s684 + [v2_s684[v1_s684]]
    return cfg

def step_4(cfg):
    v0_s4 = []
    for v1_s4 in range(len(v2_s4)):
        if v3_s4(v2_s4[v1_s4]):
            v0_s4.append(v2_s4[v1_s4])
    return cfg

def step_235(cfg):
    v0_s235 = []
    for v1_s235 in range(len(v2_s235)):
        v3_s235 = v2_s235[v1_s235]
        if v4_s235(v3_s235):
            v0_s235.append(v3_s235)
    return cfg

def step_466(cfg):
    v0_s466 = []
    for v1_s466 in range(len(v2_s466)):
        v3_s466 = v2_s466[v1_s466]
        if v4_s466(v3_s466):
            v0_s466.append(v3_s466)
    return cfg

def step_697(cfg):
    v0_s697 = []
    for v1_s697 in range(len(v2_s697)):
        v3_s697 = v2_s697[v1_s697]
        if v4_s697(v3_s697):
            v0_s697.append(v3_s697)
    return cfg

def step_17(cfg):
    v0_s17 = []
    for v1_s17 in range(len(v2_s17)):
        if v3_s17(v2_s17[v1_s17]):
            v0_s17.append(v2_s17[v1_s17])
    return cfg

def step_248(cfg):
    v0_s248 = []
    for v1_s248 in range(len(v2_s248)):
        if v3_s248(v2_s248[v1_s248]):
            v0_s248 += [v2_s248[v1_s248]]
    return cfg
